#pragma once

// Measures and signed measures on a finite measurable space.
//
// A measure is stored as its atom weights; the value of a set is the sum of
// the weights of its atoms. Countable additivity reduces to finite
// additivity here because the sigma-algebra is finite, so every measure is
// valid by construction. Arbitrary set functions, which may fail to be
// additive, are represented separately by SetFunctionTable.

#include <optional>
#include <string>
#include <vector>

#include "measlat/extended_reals.hpp"
#include "measlat/measurable_space.hpp"

namespace measlat {

class Measure {
public:
  /// Throws InvalidArgument when the weight count differs from the atom count.
  Measure(MeasurableSpace space, std::vector<ExtNonneg> weights);

  const MeasurableSpace& space() const noexcept { return space_; }
  const std::vector<ExtNonneg>& weights() const noexcept { return weights_; }
  const ExtNonneg& weight(std::size_t atom) const { return weights_.at(atom); }
  bool is_finite() const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.weights_ == b.weights_ && a.space_ == b.space_;
  }

  /// "a=1 b=0"
  std::string to_string() const;

private:
  MeasurableSpace space_;
  std::vector<ExtNonneg> weights_;
};

class SignedMeasure {
public:
  SignedMeasure(MeasurableSpace space, std::vector<ExtSigned> weights);

  const MeasurableSpace& space() const noexcept { return space_; }
  const std::vector<ExtSigned>& weights() const noexcept { return weights_; }
  const ExtSigned& weight(std::size_t atom) const { return weights_.at(atom); }

  friend bool operator==(const SignedMeasure& a, const SignedMeasure& b) {
    return a.weights_ == b.weights_ && a.space_ == b.space_;
  }

  std::string to_string() const;

private:
  MeasurableSpace space_;
  std::vector<ExtSigned> weights_;
};

/// Shorthand for tests and fixtures: a measure from atom weights on `space`.
Measure make_measure(const MeasurableSpace& space, std::initializer_list<ExtNonneg> weights);
/// The Dirac measure at `atom`.
Measure dirac(const MeasurableSpace& space, std::size_t atom);

ExtNonneg eval(const Measure& m, const MeasurableSet& a);
/// The value of a signed measure on a set; never -inf since no weight is.
ExtSigned eval(const SignedMeasure& s, const MeasurableSet& a);

/// m(A) <= n(A) for every measurable A. On an atomic space this holds iff
/// it holds on every atom, which is how it is computed.
bool leq(const Measure& m, const Measure& n);

Measure zero_measure(const MeasurableSpace& space);
Measure infinity_measure(const MeasurableSpace& space);

Measure add_measures(const Measure& m, const Measure& n);
/// c * m for a nonnegative rational c, with 0 * inf = 0.
Measure scale(const Rational& c, const Measure& m);

/// n - m atom-wise. Throws UndefinedDifference naming the first atom where
/// m is infinite.
SignedMeasure sub_measures(const Measure& n, const Measure& m);

/// A raw set function: one value per measurable set, indexed by bitmask.
class SetFunctionTable {
public:
  /// Throws InvalidArgument unless values.size() == 2^n.
  SetFunctionTable(MeasurableSpace space, std::vector<ExtNonneg> values);

  const MeasurableSpace& space() const noexcept { return space_; }
  const std::vector<ExtNonneg>& values() const noexcept { return values_; }
  const ExtNonneg& at(const MeasurableSet& a) const;
  const ExtNonneg& at(AtomMask mask) const { return values_.at(mask); }

private:
  MeasurableSpace space_;
  std::vector<ExtNonneg> values_;
};

/// The table of m(A) for every A.
SetFunctionTable tabulate(const Measure& m);
/// The pointwise minimum / maximum of two set functions. For measures these
/// are generally not measures.
SetFunctionTable pointwise_min(const Measure& m, const Measure& n);
SetFunctionTable pointwise_max(const Measure& m, const Measure& n);

struct AdditivityWitness {
  MeasurableSet set;
  /// The table values of the atoms of `set`, in atom order.
  std::vector<ExtNonneg> atom_values;
  /// The table value of `set` itself.
  ExtNonneg set_value;

  /// "0 + 0 != 1". For the empty set, "0 != t(empty)".
  std::string mismatch() const;
};

struct AdditivityReport {
  bool is_measure = true;
  std::optional<AdditivityWitness> witness;
};

/// A table is a measure iff t(empty) = 0 and every t(A) equals the sum of
/// t({x}) over the atoms x of A. Sets are checked in ascending bitmask order
/// and the first failure is returned as the witness.
AdditivityReport is_measure(const SetFunctionTable& t);

} // namespace measlat
