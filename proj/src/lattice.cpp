#include "measlat/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "measlat/decomposition.hpp"

namespace measlat {

// ------------------------------------------------------------ MeasureFamily

namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i)
    labels.push_back(std::to_string(i));
  return labels;
}

} // namespace

MeasureFamily::MeasureFamily(std::vector<std::string> labels, std::vector<Measure> members)
    : labels_(std::move(labels)), members_(std::move(members)) {
  validate();
}

MeasureFamily::MeasureFamily(std::vector<Measure> members) : members_(std::move(members)) {
  labels_ = default_labels(members_.size());
  validate();
}

void MeasureFamily::validate() const {
  if (members_.empty())
    throw Error(ErrorKind::EmptyFamily, "a measure family needs at least one member");
  if (labels_.size() != members_.size())
    throw Error(ErrorKind::InvalidArgument, "family needs one label per member");
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate family label '" + label + "'");
  }
  for (const auto& m : members_)
    require_same_space(members_.front().space(), m.space());
}

// ------------------------------------------------------ PartitionAssignment

PartitionAssignment::PartitionAssignment(Partition partition, std::vector<std::size_t> members,
                                         std::size_t family_size)
    : partition_(std::move(partition)), members_(std::move(members)) {
  if (members_.size() != partition_.block_count())
    throw Error(ErrorKind::InvalidArgument, "assignment needs exactly one member per block");
  for (std::size_t m : members_) {
    if (m >= family_size)
      throw Error(ErrorKind::InvalidArgument, "assignment refers to a member outside the family");
  }
}

ExtNonneg PartitionAssignment::objective(const MeasureFamily& f, const MeasurableSet& a) const {
  require_same_space(f.space(), partition_.space());
  ExtNonneg total;
  for (std::size_t k = 0; k < members_.size(); ++k)
    total += eval(f.member(members_[k]), intersect(a, partition_.block(k)));
  return total;
}

std::string PartitionAssignment::to_string(const MeasureFamily& f) const {
  std::string out = "[";
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k != 0)
      out += ", ";
    out += partition_.block(k).to_string() + "->" + f.label(members_[k]);
  }
  return out + "]";
}

// ------------------------------------------------------------ binary ops

namespace {

template <class Pick>
Measure atomwise(const Measure& m, const Measure& n, Pick pick) {
  require_same_space(m.space(), n.space());
  std::vector<ExtNonneg> w;
  w.reserve(m.weights().size());
  for (std::size_t i = 0; i < m.weights().size(); ++i)
    w.push_back(pick(m.weights()[i], n.weights()[i]));
  return Measure(m.space(), std::move(w));
}

template <class Pick>
Measure atomwise(const MeasureFamily& f, Pick pick) {
  std::vector<ExtNonneg> w = f.member(0).weights();
  for (const auto& m : f.members()) {
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = pick(w[i], m.weights()[i]);
  }
  return Measure(f.space(), std::move(w));
}

const ExtNonneg& min_of(const ExtNonneg& x, const ExtNonneg& y) { return std::min(x, y); }
const ExtNonneg& max_of(const ExtNonneg& x, const ExtNonneg& y) { return std::max(x, y); }

} // namespace

Measure meet2(const Measure& m, const Measure& n) { return atomwise(m, n, min_of); }
Measure join2(const Measure& m, const Measure& n) { return atomwise(m, n, max_of); }

Measure meet_family(const MeasureFamily& f) { return atomwise(f, min_of); }
Measure join_family(const MeasureFamily& f) { return atomwise(f, max_of); }

// --------------------------------------------------- index-partition formula

ExtNonneg index_partition_formula(const MeasureFamily& f, const MeasurableSet& a, std::uint64_t cap) {
  const auto& space = f.space();
  require_same_space(space, a.space());
  const std::size_t n = space.size();
  const std::size_t k = f.size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > cap / k) {
      throw Error(ErrorKind::TooLargeToEnumerate, std::to_string(k) + "^" + std::to_string(n) +
                                                      " index partitions exceed the cap of " + std::to_string(cap));
    }
    total *= k;
  }

  // owner[i] is the member whose block B_owner[i] contains atom i.
  std::vector<std::size_t> owner(n, 0);
  std::optional<ExtNonneg> best;
  for (;;) {
    std::vector<AtomMask> blocks(k, 0);
    for (std::size_t i = 0; i < n; ++i)
      blocks[owner[i]] |= AtomMask{1} << i;
    ExtNonneg value;
    for (std::size_t j = 0; j < k; ++j)
      value += eval(f.member(j), space.from_mask(a.mask() & blocks[j]));
    if (!best || value < *best)
      best = value;

    std::size_t i = 0;
    while (i < n && owner[i] == k - 1)
      owner[i++] = 0;
    if (i == n)
      break;
    ++owner[i];
  }
  return *best;
}

// ------------------------------------------------------------ Jordan route

Measure meet_via_jordan(const Measure& m, const Measure& n) {
  // With m finite, (n - m)^- = max(m - n, 0) is finite and at most m on
  // every atom, so m - (n - m)^- never meets inf - inf and stays >= 0.
  const JordanPair parts = jordan_decompose(sub_measures(n, m));
  return Measure(m.space(), [&] {
    const SignedMeasure diff = sub_measures(m, parts.negative);
    std::vector<ExtNonneg> w;
    for (const auto& x : diff.weights())
      w.push_back(to_nonneg(x));
    return w;
  }());
}

Measure join_via_jordan(const Measure& m, const Measure& n) {
  const JordanPair parts = jordan_decompose(sub_measures(n, m));
  return add_measures(m, parts.positive);
}

} // namespace measlat
