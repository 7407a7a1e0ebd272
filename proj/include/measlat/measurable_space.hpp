#pragma once

// Finite measurable spaces presented by their atoms.
//
// Every finite sigma-algebra is generated by a partition of X into atoms, so
// a measurable set is just a subset of atom indices, stored as a bitmask.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "measlat/error.hpp"

namespace measlat {

using AtomMask = std::uint64_t;

inline constexpr std::size_t kMaxAtoms = 64;
inline constexpr std::size_t kDefaultSetCap = 20;
inline constexpr std::size_t kDefaultPartitionCap = 8;

class MeasurableSet;

class MeasurableSpace {
public:
  /// The empty space (X = {}), whose only measurable set is the empty set.
  MeasurableSpace();
  /// Throws InvalidArgument on empty, duplicate, or too many (> 64) names.
  explicit MeasurableSpace(std::vector<std::string> atom_names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::vector<std::string>& atom_names() const noexcept { return *names_; }
  const std::string& atom_name(std::size_t i) const { return names_->at(i); }
  std::optional<std::size_t> find_atom(std::string_view name) const;

  AtomMask full_mask() const noexcept;

  MeasurableSet empty_set() const;
  MeasurableSet full_set() const;
  MeasurableSet atom(std::size_t i) const;
  MeasurableSet from_mask(AtomMask mask) const;
  MeasurableSet from_indices(const std::vector<std::size_t>& indices) const;

  /// Spaces are equal when they have the same atom names in the same order.
  friend bool operator==(const MeasurableSpace& a, const MeasurableSpace& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Throws SpaceMismatch unless the two spaces are equal.
void require_same_space(const MeasurableSpace& a, const MeasurableSpace& b);

class MeasurableSet {
public:
  MeasurableSet(MeasurableSpace space, AtomMask mask);

  const MeasurableSpace& space() const noexcept { return space_; }
  AtomMask mask() const noexcept { return mask_; }
  bool contains(std::size_t atom) const noexcept { return (mask_ >> atom) & 1U; }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t cardinality() const noexcept;
  std::vector<std::size_t> indices() const;

  friend bool operator==(const MeasurableSet& a, const MeasurableSet& b) {
    return a.mask_ == b.mask_ && a.space_ == b.space_;
  }

  /// Renders as "{a,b}" ("{}" when empty).
  std::string to_string() const;
  /// Renders as a set expression: "a|b", or "empty".
  std::string to_expression() const;

private:
  MeasurableSpace space_;
  AtomMask mask_;
};

MeasurableSet intersect(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet unite(const MeasurableSet& a, const MeasurableSet& b);
MeasurableSet complement(const MeasurableSet& a);
bool is_disjoint(const MeasurableSet& a, const MeasurableSet& b);
bool is_subset(const MeasurableSet& a, const MeasurableSet& b);

/// A partition of X into pairwise disjoint blocks. Empty blocks are allowed.
class Partition {
public:
  /// Throws InvalidArgument unless the blocks are disjoint and cover X.
  Partition(MeasurableSpace space, std::vector<AtomMask> blocks);

  const MeasurableSpace& space() const noexcept { return space_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<AtomMask>& block_masks() const noexcept { return blocks_; }
  MeasurableSet block(std::size_t i) const { return space_.from_mask(blocks_.at(i)); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.blocks_ == b.blocks_ && a.space_ == b.space_;
  }

  std::string to_string() const;

private:
  MeasurableSpace space_;
  std::vector<AtomMask> blocks_;
};

/// Visits all 2^n measurable sets in ascending bitmask order.
/// Throws TooLargeToEnumerate when n > cap.
void for_each_set(const MeasurableSpace& space, const std::function<void(const MeasurableSet&)>& visit,
                  std::size_t cap = kDefaultSetCap);
std::vector<MeasurableSet> enumerate_sets(const MeasurableSpace& space, std::size_t cap = kDefaultSetCap);

/// Visits every partition of the atoms into nonempty blocks, Bell(n) in total.
/// Partitions are generated as restricted growth strings in lexicographic
/// order; blocks are ordered by their smallest atom. For n = 2 the order is
/// [{a,b}], [{a},{b}].
void for_each_partition(const MeasurableSpace& space, const std::function<void(const Partition&)>& visit,
                        std::size_t cap = kDefaultPartitionCap);
std::vector<Partition> enumerate_partitions(const MeasurableSpace& space, std::size_t cap = kDefaultPartitionCap);

} // namespace measlat
