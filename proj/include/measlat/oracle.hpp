#pragma once

// Brute-force evaluation of the infima and suprema that define meets and
// joins of measures. These enumerate the full optimisation domains and share
// no code with the atom-wise fast paths in lattice.hpp; they exist to certify
// them.

#include <cstdint>
#include <optional>

#include "measlat/lattice.hpp"

namespace measlat {

struct OracleLimits {
  /// Max atoms for enumerating the sets B of the binary formulas.
  std::size_t set_atoms = kDefaultSetCap;
  /// Max atoms and family size for enumerating partition assignments.
  std::size_t partition_atoms = 6;
  std::size_t family_size = 4;
};

struct SetWitness {
  ExtNonneg value;
  MeasurableSet witness;
};

struct PartitionWitness {
  ExtNonneg value;
  PartitionAssignment witness;
};

/// min over all B of m(A & B) + n(A & ~B), with the first minimising B in
/// ascending bitmask order.
SetWitness oracle_meet2(const Measure& m, const Measure& n, const MeasurableSet& a, const OracleLimits& limits = {});
/// max over all B of m(A & B) + n(A & ~B).
SetWitness oracle_join2(const Measure& m, const Measure& n, const MeasurableSet& a, const OracleLimits& limits = {});

/// min over every partition of X into nonempty blocks and every choice of a
/// member per block of sum_k mu_k(A & B_k). Ties keep the first candidate in
/// partition order, then lexicographic member order.
PartitionWitness oracle_family_meet(const MeasureFamily& f, const MeasurableSet& a, const OracleLimits& limits = {});
PartitionWitness oracle_family_join(const MeasureFamily& f, const MeasurableSet& a, const OracleLimits& limits = {});

/// The same optimum restricted to the partition of X into single atoms.
PartitionWitness oracle_family_meet_atomic(const MeasureFamily& f, const MeasurableSet& a);
PartitionWitness oracle_family_join_atomic(const MeasureFamily& f, const MeasurableSet& a);

struct GlbReport {
  bool is_glb = true;
  /// Set when the candidate is not below some member: that member's index.
  std::optional<std::size_t> violated_member;
  /// Set when a sampled common lower bound is not below the candidate.
  std::optional<Measure> counterexample;
};

/// Checks that `candidate` is below every member, then draws `samples`
/// random common lower bounds rho and checks rho <= candidate. Each atom
/// weight of rho is drawn uniformly from {0, 1/D, ..., 1} times the
/// atom-wise family minimum (or from small rationals when that minimum is
/// inf). Deterministic for a given seed.
GlbReport oracle_is_glb(const Measure& candidate, const MeasureFamily& f, std::size_t samples,
                        std::uint64_t seed = 0);
/// The dual check for least upper bounds: every sampled common upper bound
/// must dominate the candidate.
GlbReport oracle_is_lub(const Measure& candidate, const MeasureFamily& f, std::size_t samples,
                        std::uint64_t seed = 0);

/// Cross-check for is_measure: t(empty) = 0 and t(A | B) = t(A) + t(B) for
/// every disjoint pair, examined over all 4^n pairs. Returns the first
/// failing pair.
struct PairwiseAdditivity {
  bool additive = true;
  std::optional<std::pair<MeasurableSet, MeasurableSet>> witness;
};
PairwiseAdditivity oracle_pairwise_additive(const SetFunctionTable& t, std::size_t cap = 10);

} // namespace measlat
