#include "measlat/decomposition.hpp"

#include <algorithm>

namespace measlat {

HahnDecomposition hahn_decompose(const SignedMeasure& s) {
  const auto& space = s.space();
  AtomMask positive = 0;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (s.weight(i) >= ExtSigned(0))
      positive |= AtomMask{1} << i;
  }
  return {space.from_mask(positive), space.from_mask(space.full_mask() & ~positive)};
}

JordanPair jordan_decompose(const SignedMeasure& s) {
  std::vector<ExtNonneg> pos;
  std::vector<ExtNonneg> neg;
  pos.reserve(s.weights().size());
  neg.reserve(s.weights().size());
  for (const auto& w : s.weights()) {
    pos.push_back(pos_part(w));
    neg.push_back(neg_part(w));
  }
  return {Measure(s.space(), std::move(pos)), Measure(s.space(), std::move(neg))};
}

SignedMeasure reconstruct(const JordanPair& pair) { return sub_measures(pair.positive, pair.negative); }

namespace {

// Enumerates the subsets of A directly (submask walk) so the search space is
// 2^|A| rather than 2^n.
template <class Better>
ExtSigned extremum_over_subsets(const SignedMeasure& s, const MeasurableSet& a, std::size_t cap, Better better) {
  require_same_space(s.space(), a.space());
  if (a.cardinality() > cap) {
    throw Error(ErrorKind::TooLargeToEnumerate, "cannot enumerate the " + std::to_string(a.cardinality()) +
                                                    "-atom set's subsets (cap " + std::to_string(cap) + ")");
  }
  ExtSigned best = eval(s, a.space().empty_set());
  AtomMask sub = a.mask();
  for (;;) {
    const ExtSigned v = eval(s, a.space().from_mask(sub));
    if (better(v, best))
      best = v;
    if (sub == 0)
      break;
    sub = (sub - 1) & a.mask();
  }
  return best;
}

} // namespace

ExtSigned sup_over_subsets(const SignedMeasure& s, const MeasurableSet& a, std::size_t cap) {
  return extremum_over_subsets(s, a, cap, [](const ExtSigned& x, const ExtSigned& y) { return x > y; });
}

ExtSigned inf_over_subsets(const SignedMeasure& s, const MeasurableSet& a, std::size_t cap) {
  return extremum_over_subsets(s, a, cap, [](const ExtSigned& x, const ExtSigned& y) { return x < y; });
}

} // namespace measlat
