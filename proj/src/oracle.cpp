#include "measlat/oracle.hpp"

#include <random>

namespace measlat {

namespace {

template <class Better>
SetWitness binary_oracle(const Measure& m, const Measure& n, const MeasurableSet& a, const OracleLimits& limits,
                         Better better) {
  require_same_space(m.space(), n.space());
  require_same_space(m.space(), a.space());
  std::optional<SetWitness> best;
  for_each_set(
      m.space(),
      [&](const MeasurableSet& b) {
        const ExtNonneg v = eval(m, intersect(a, b)) + eval(n, intersect(a, complement(b)));
        if (!best || better(v, best->value))
          best = SetWitness{v, b};
      },
      limits.set_atoms);
  return *best;
}

void check_family_limits(const MeasureFamily& f, const OracleLimits& limits) {
  if (f.size() > limits.family_size) {
    throw Error(ErrorKind::TooLargeToEnumerate, "family of " + std::to_string(f.size()) +
                                                    " measures exceeds the oracle cap of " +
                                                    std::to_string(limits.family_size));
  }
}

// Searches every member assignment for one partition. values[k][j] holds
// mu_j(A & B_k).
template <class Better>
void search_assignments(const Partition& p, const MeasureFamily& f, const MeasurableSet& a, Better better,
                        std::optional<PartitionWitness>& best) {
  const std::size_t blocks = p.block_count();
  const std::size_t members = f.size();
  std::vector<std::vector<ExtNonneg>> values(blocks);
  for (std::size_t k = 0; k < blocks; ++k) {
    const MeasurableSet piece = intersect(a, p.block(k));
    for (const auto& m : f.members())
      values[k].push_back(eval(m, piece));
  }

  std::vector<std::size_t> choice(blocks, 0);
  for (;;) {
    ExtNonneg total;
    for (std::size_t k = 0; k < blocks; ++k)
      total += values[k][choice[k]];
    if (!best || better(total, best->value))
      best = PartitionWitness{total, PartitionAssignment(p, choice, members)};

    // Odometer with the last block varying fastest: lexicographic order.
    std::size_t k = blocks;
    while (k > 0 && choice[k - 1] == members - 1)
      choice[--k] = 0;
    if (k == 0)
      return;
    ++choice[k - 1];
  }
}

template <class Better>
PartitionWitness family_oracle(const MeasureFamily& f, const MeasurableSet& a, const OracleLimits& limits,
                               Better better) {
  require_same_space(f.space(), a.space());
  check_family_limits(f, limits);
  std::optional<PartitionWitness> best;
  for_each_partition(
      f.space(), [&](const Partition& p) { search_assignments(p, f, a, better, best); }, limits.partition_atoms);
  return *best;
}

template <class Better>
PartitionWitness family_oracle_atomic(const MeasureFamily& f, const MeasurableSet& a, Better better) {
  require_same_space(f.space(), a.space());
  const auto& space = f.space();
  std::vector<AtomMask> singletons;
  for (std::size_t i = 0; i < space.size(); ++i)
    singletons.push_back(AtomMask{1} << i);
  const Partition atoms(space, std::move(singletons));

  // Blocks are independent, so the optimum picks the best member per atom.
  std::vector<std::size_t> choice;
  ExtNonneg total;
  for (std::size_t k = 0; k < atoms.block_count(); ++k) {
    const MeasurableSet piece = intersect(a, atoms.block(k));
    std::size_t pick = 0;
    ExtNonneg pick_value = eval(f.member(0), piece);
    for (std::size_t j = 1; j < f.size(); ++j) {
      const ExtNonneg v = eval(f.member(j), piece);
      if (better(v, pick_value)) {
        pick = j;
        pick_value = v;
      }
    }
    choice.push_back(pick);
    total += pick_value;
  }
  return PartitionWitness{total, PartitionAssignment(atoms, std::move(choice), f.size())};
}

const auto smaller = [](const ExtNonneg& x, const ExtNonneg& y) { return x < y; };
const auto larger = [](const ExtNonneg& x, const ExtNonneg& y) { return x > y; };

} // namespace

SetWitness oracle_meet2(const Measure& m, const Measure& n, const MeasurableSet& a, const OracleLimits& limits) {
  return binary_oracle(m, n, a, limits, smaller);
}

SetWitness oracle_join2(const Measure& m, const Measure& n, const MeasurableSet& a, const OracleLimits& limits) {
  return binary_oracle(m, n, a, limits, larger);
}

PartitionWitness oracle_family_meet(const MeasureFamily& f, const MeasurableSet& a, const OracleLimits& limits) {
  return family_oracle(f, a, limits, smaller);
}

PartitionWitness oracle_family_join(const MeasureFamily& f, const MeasurableSet& a, const OracleLimits& limits) {
  return family_oracle(f, a, limits, larger);
}

PartitionWitness oracle_family_meet_atomic(const MeasureFamily& f, const MeasurableSet& a) {
  return family_oracle_atomic(f, a, smaller);
}

PartitionWitness oracle_family_join_atomic(const MeasureFamily& f, const MeasurableSet& a) {
  return family_oracle_atomic(f, a, larger);
}

// ------------------------------------------------------------- glb / lub

namespace {

constexpr long long kSampleDenominator = 16;

// Draws a common lower bound (below = true) or upper bound of the family.
// `extreme` is the atom-wise minimum (below) or maximum of the family.
Measure sample_bound(const Measure& extreme, bool below, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> step(0, kSampleDenominator);
  std::uniform_int_distribution<long long> magnitude(0, 8 * kSampleDenominator);
  std::bernoulli_distribution pick_inf(0.25);

  std::vector<ExtNonneg> w;
  for (const auto& bound : extreme.weights()) {
    if (below) {
      if (bound.is_infinite())
        w.push_back(pick_inf(rng) ? bound : ExtNonneg(Rational(magnitude(rng), kSampleDenominator)));
      else
        w.push_back(ExtNonneg(bound.value() * Rational(step(rng), kSampleDenominator)));
    } else {
      if (bound.is_infinite() || pick_inf(rng))
        w.push_back(ExtNonneg::infinity());
      else
        w.push_back(ExtNonneg(bound.value() + Rational(magnitude(rng), kSampleDenominator)));
    }
  }
  return Measure(extreme.space(), std::move(w));
}

GlbReport check_bound(const Measure& candidate, const MeasureFamily& f, std::size_t samples, std::uint64_t seed,
                      bool below) {
  require_same_space(candidate.space(), f.space());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const bool ok = below ? leq(candidate, f.member(j)) : leq(f.member(j), candidate);
    if (!ok)
      return {false, j, std::nullopt};
  }
  const Measure extreme = below ? meet_family(f) : join_family(f);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    Measure rho = sample_bound(extreme, below, rng);
    const bool ok = below ? leq(rho, candidate) : leq(candidate, rho);
    if (!ok)
      return {false, std::nullopt, std::move(rho)};
  }
  return {};
}

} // namespace

GlbReport oracle_is_glb(const Measure& candidate, const MeasureFamily& f, std::size_t samples, std::uint64_t seed) {
  return check_bound(candidate, f, samples, seed, true);
}

GlbReport oracle_is_lub(const Measure& candidate, const MeasureFamily& f, std::size_t samples, std::uint64_t seed) {
  return check_bound(candidate, f, samples, seed, false);
}

// -------------------------------------------------- pairwise additivity

PairwiseAdditivity oracle_pairwise_additive(const SetFunctionTable& t, std::size_t cap) {
  const auto& space = t.space();
  if (!t.at(AtomMask{0}).is_zero())
    return {false, std::pair{space.empty_set(), space.empty_set()}};
  const auto sets = enumerate_sets(space, cap);
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      if (!is_disjoint(a, b))
        continue;
      if (t.at(unite(a, b)) != t.at(a) + t.at(b))
        return {false, std::pair{a, b}};
    }
  }
  return {};
}

} // namespace measlat
