#include "measlat/measures.hpp"

#include <algorithm>
#include <bit>

namespace measlat {

namespace {

template <class T>
std::string render_weights(const MeasurableSpace& space, const std::vector<T>& weights) {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i != 0)
      out += ' ';
    out += space.atom_name(i) + "=" + weights[i].to_string();
  }
  return out;
}

void check_weight_count(const MeasurableSpace& space, std::size_t count) {
  if (count != space.size()) {
    throw Error(ErrorKind::InvalidArgument, "expected " + std::to_string(space.size()) + " atom weights, got " +
                                                std::to_string(count));
  }
}

} // namespace

Measure::Measure(MeasurableSpace space, std::vector<ExtNonneg> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  check_weight_count(space_, weights_.size());
}

bool Measure::is_finite() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const ExtNonneg& w) { return w.is_finite(); });
}

std::string Measure::to_string() const { return render_weights(space_, weights_); }

SignedMeasure::SignedMeasure(MeasurableSpace space, std::vector<ExtSigned> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
  check_weight_count(space_, weights_.size());
}

std::string SignedMeasure::to_string() const { return render_weights(space_, weights_); }

Measure make_measure(const MeasurableSpace& space, std::initializer_list<ExtNonneg> weights) {
  return Measure(space, std::vector<ExtNonneg>(weights));
}

Measure dirac(const MeasurableSpace& space, std::size_t atom) {
  std::vector<ExtNonneg> w(space.size());
  w.at(atom) = ExtNonneg(1);
  return Measure(space, std::move(w));
}

ExtNonneg eval(const Measure& m, const MeasurableSet& a) {
  require_same_space(m.space(), a.space());
  ExtNonneg total;
  for (AtomMask bits = a.mask(); bits != 0; bits &= bits - 1) {
    const auto& w = m.weights()[static_cast<std::size_t>(std::countr_zero(bits))];
    if (w.is_infinite())
      return w;
    total += w;
  }
  return total;
}

ExtSigned eval(const SignedMeasure& s, const MeasurableSet& a) {
  require_same_space(s.space(), a.space());
  ExtSigned total;
  for (AtomMask bits = a.mask(); bits != 0; bits &= bits - 1)
    total = total + s.weights()[static_cast<std::size_t>(std::countr_zero(bits))];
  return total;
}

bool leq(const Measure& m, const Measure& n) {
  require_same_space(m.space(), n.space());
  for (std::size_t i = 0; i < m.weights().size(); ++i) {
    if (m.weights()[i] > n.weights()[i])
      return false;
  }
  return true;
}

Measure zero_measure(const MeasurableSpace& space) {
  return Measure(space, std::vector<ExtNonneg>(space.size()));
}

Measure infinity_measure(const MeasurableSpace& space) {
  return Measure(space, std::vector<ExtNonneg>(space.size(), ExtNonneg::infinity()));
}

Measure add_measures(const Measure& m, const Measure& n) {
  require_same_space(m.space(), n.space());
  std::vector<ExtNonneg> w(m.weights().size());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = m.weights()[i] + n.weights()[i];
  return Measure(m.space(), std::move(w));
}

Measure scale(const Rational& c, const Measure& m) {
  std::vector<ExtNonneg> w;
  w.reserve(m.weights().size());
  for (const auto& x : m.weights())
    w.push_back(x.scaled(c));
  return Measure(m.space(), std::move(w));
}

SignedMeasure sub_measures(const Measure& n, const Measure& m) {
  require_same_space(n.space(), m.space());
  std::vector<ExtSigned> w;
  w.reserve(n.weights().size());
  for (std::size_t i = 0; i < n.weights().size(); ++i) {
    try {
      w.push_back(sub_checked(n.weights()[i], m.weights()[i]));
    } catch (const Error& e) {
      throw Error(ErrorKind::UndefinedDifference,
                  "difference undefined at atom '" + n.space().atom_name(i) + "': " + e.what(), i);
    }
  }
  return SignedMeasure(n.space(), std::move(w));
}

// --------------------------------------------------------- SetFunctionTable

SetFunctionTable::SetFunctionTable(MeasurableSpace space, std::vector<ExtNonneg> values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (space_.size() >= kMaxAtoms || values_.size() != (std::size_t{1} << space_.size()))
    throw Error(ErrorKind::InvalidArgument, "a set function table needs exactly 2^n values");
}

const ExtNonneg& SetFunctionTable::at(const MeasurableSet& a) const {
  require_same_space(space_, a.space());
  return values_.at(a.mask());
}

SetFunctionTable tabulate(const Measure& m) {
  std::vector<ExtNonneg> values;
  for_each_set(m.space(), [&](const MeasurableSet& a) { values.push_back(eval(m, a)); });
  return SetFunctionTable(m.space(), std::move(values));
}

namespace {

template <class Pick>
SetFunctionTable pointwise(const Measure& m, const Measure& n, Pick pick) {
  require_same_space(m.space(), n.space());
  std::vector<ExtNonneg> values;
  for_each_set(m.space(), [&](const MeasurableSet& a) { values.push_back(pick(eval(m, a), eval(n, a))); });
  return SetFunctionTable(m.space(), std::move(values));
}

} // namespace

SetFunctionTable pointwise_min(const Measure& m, const Measure& n) {
  return pointwise(m, n, [](const ExtNonneg& x, const ExtNonneg& y) { return std::min(x, y); });
}

SetFunctionTable pointwise_max(const Measure& m, const Measure& n) {
  return pointwise(m, n, [](const ExtNonneg& x, const ExtNonneg& y) { return std::max(x, y); });
}

std::string AdditivityWitness::mismatch() const {
  std::string lhs;
  for (const auto& v : atom_values) {
    if (!lhs.empty())
      lhs += " + ";
    lhs += v.to_string();
  }
  if (lhs.empty())
    lhs = "0";
  return lhs + " != " + set_value.to_string();
}

AdditivityReport is_measure(const SetFunctionTable& t) {
  const auto& space = t.space();
  const AtomMask count = AtomMask{1} << space.size();
  for (AtomMask mask = 0; mask < count; ++mask) {
    const MeasurableSet a = space.from_mask(mask);
    std::vector<ExtNonneg> atom_values;
    ExtNonneg total;
    for (std::size_t i : a.indices()) {
      atom_values.push_back(t.at(AtomMask{1} << i));
      total += atom_values.back();
    }
    if (total != t.at(mask))
      return {false, AdditivityWitness{a, std::move(atom_values), t.at(mask)}};
  }
  return {};
}

} // namespace measlat
