#include "measlat/measurable_space.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace measlat {

MeasurableSpace::MeasurableSpace() : names_(std::make_shared<const std::vector<std::string>>()) {}

MeasurableSpace::MeasurableSpace(std::vector<std::string> atom_names) {
  if (atom_names.size() > kMaxAtoms)
    throw Error(ErrorKind::InvalidArgument,
                "a space has at most " + std::to_string(kMaxAtoms) + " atoms, got " + std::to_string(atom_names.size()));
  std::unordered_set<std::string> seen;
  for (const auto& name : atom_names) {
    if (name.empty())
      throw Error(ErrorKind::InvalidArgument, "atom names must be nonempty");
    if (!seen.insert(name).second)
      throw Error(ErrorKind::InvalidArgument, "duplicate atom name '" + name + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(atom_names));
}

std::optional<std::size_t> MeasurableSpace::find_atom(std::string_view name) const {
  const auto it = std::find(names_->begin(), names_->end(), name);
  if (it == names_->end())
    return std::nullopt;
  return static_cast<std::size_t>(it - names_->begin());
}

AtomMask MeasurableSpace::full_mask() const noexcept {
  const std::size_t n = size();
  return n == kMaxAtoms ? ~AtomMask{0} : (AtomMask{1} << n) - 1;
}

MeasurableSet MeasurableSpace::empty_set() const { return MeasurableSet(*this, 0); }
MeasurableSet MeasurableSpace::full_set() const { return MeasurableSet(*this, full_mask()); }

MeasurableSet MeasurableSpace::atom(std::size_t i) const {
  if (i >= size())
    throw Error(ErrorKind::InvalidArgument, "atom index " + std::to_string(i) + " out of range");
  return MeasurableSet(*this, AtomMask{1} << i);
}

MeasurableSet MeasurableSpace::from_mask(AtomMask mask) const { return MeasurableSet(*this, mask); }

MeasurableSet MeasurableSpace::from_indices(const std::vector<std::size_t>& indices) const {
  AtomMask mask = 0;
  for (std::size_t i : indices)
    mask |= atom(i).mask();
  return MeasurableSet(*this, mask);
}

void require_same_space(const MeasurableSpace& a, const MeasurableSpace& b) {
  if (!(a == b))
    throw Error(ErrorKind::SpaceMismatch, "operands belong to different measurable spaces");
}

// ------------------------------------------------------------- MeasurableSet

MeasurableSet::MeasurableSet(MeasurableSpace space, AtomMask mask) : space_(std::move(space)), mask_(mask) {
  if ((mask_ & ~space_.full_mask()) != 0)
    throw Error(ErrorKind::InvalidArgument, "set mask refers to atoms outside the space");
}

std::size_t MeasurableSet::cardinality() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> MeasurableSet::indices() const {
  std::vector<std::size_t> out;
  for (AtomMask m = mask_; m != 0; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

std::string MeasurableSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : indices()) {
    if (!first)
      out += ',';
    out += space_.atom_name(i);
    first = false;
  }
  return out + "}";
}

std::string MeasurableSet::to_expression() const {
  if (mask_ == 0)
    return "empty";
  std::string out;
  for (std::size_t i : indices()) {
    if (!out.empty())
      out += '|';
    out += space_.atom_name(i);
  }
  return out;
}

MeasurableSet intersect(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a.space(), b.space());
  return MeasurableSet(a.space(), a.mask() & b.mask());
}

MeasurableSet unite(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a.space(), b.space());
  return MeasurableSet(a.space(), a.mask() | b.mask());
}

MeasurableSet complement(const MeasurableSet& a) {
  return MeasurableSet(a.space(), ~a.mask() & a.space().full_mask());
}

bool is_disjoint(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a.space(), b.space());
  return (a.mask() & b.mask()) == 0;
}

bool is_subset(const MeasurableSet& a, const MeasurableSet& b) {
  require_same_space(a.space(), b.space());
  return (a.mask() & ~b.mask()) == 0;
}

// ----------------------------------------------------------------- Partition

Partition::Partition(MeasurableSpace space, std::vector<AtomMask> blocks)
    : space_(std::move(space)), blocks_(std::move(blocks)) {
  AtomMask seen = 0;
  for (AtomMask b : blocks_) {
    if ((b & ~space_.full_mask()) != 0)
      throw Error(ErrorKind::InvalidArgument, "partition block refers to atoms outside the space");
    if ((b & seen) != 0)
      throw Error(ErrorKind::InvalidArgument, "partition blocks overlap");
    seen |= b;
  }
  if (seen != space_.full_mask())
    throw Error(ErrorKind::InvalidArgument, "partition blocks do not cover the space");
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i != 0)
      out += ", ";
    out += block(i).to_string();
  }
  return out + "]";
}

// --------------------------------------------------------------- enumeration

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorKind::TooLargeToEnumerate, std::string("cannot enumerate ") + what + " of a space with " +
                                                    std::to_string(n) + " atoms (cap " + std::to_string(cap) + ")");
  }
}

} // namespace

void for_each_set(const MeasurableSpace& space, const std::function<void(const MeasurableSet&)>& visit,
                  std::size_t cap) {
  check_cap(space.size(), std::min(cap, kMaxAtoms - 1), "the measurable sets");
  const AtomMask count = AtomMask{1} << space.size();
  for (AtomMask m = 0; m < count; ++m)
    visit(MeasurableSet(space, m));
}

std::vector<MeasurableSet> enumerate_sets(const MeasurableSpace& space, std::size_t cap) {
  std::vector<MeasurableSet> out;
  for_each_set(space, [&](const MeasurableSet& s) { out.push_back(s); }, cap);
  return out;
}

void for_each_partition(const MeasurableSpace& space, const std::function<void(const Partition&)>& visit,
                        std::size_t cap) {
  const std::size_t n = space.size();
  check_cap(n, cap, "the partitions");
  if (n == 0) {
    visit(Partition(space, {}));
    return;
  }
  // growth[i] is the block of atom i; block_max[i] = max(growth[0..i]).
  std::vector<std::size_t> growth(n, 0);
  std::vector<std::size_t> block_max(n, 0);
  for (;;) {
    std::vector<AtomMask> blocks(block_max[n - 1] + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
      blocks[growth[i]] |= AtomMask{1} << i;
    visit(Partition(space, std::move(blocks)));

    std::size_t i = n - 1;
    while (i > 0 && growth[i] == block_max[i - 1] + 1)
      --i;
    if (i == 0)
      return;
    ++growth[i];
    block_max[i] = std::max(block_max[i - 1], growth[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      growth[j] = 0;
      block_max[j] = block_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(const MeasurableSpace& space, std::size_t cap) {
  std::vector<Partition> out;
  for_each_partition(space, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

} // namespace measlat
