#pragma once

// Meets and joins in the lattice of measures.
//
// The greatest lower bound of mu and nu is the measure
//
//   (mu meet nu)(A) = inf over B of  mu(A & B) + nu(A & ~B)
//
// and for a family {mu_i} it is the infimum of sum_k mu_{i_k}(A & B_k) over
// every measurable partition {B_k} of X with a member chosen per block. Joins
// replace inf with sup. On a finite atomic space both optima are attained by
// splitting A into single atoms and taking the cheapest (dearest) member on
// each, so the lattice operations here are atom-wise min and max. The full
// optimisation problems are solved by brute force in oracle.hpp, and the
// tests hold the two routes to exact agreement.

#include <string>
#include <vector>

#include "measlat/measures.hpp"

namespace measlat {

/// A nonempty finite family of measures on one space, each with a distinct
/// label.
class MeasureFamily {
public:
  /// Throws EmptyFamily for no members, SpaceMismatch when members live on
  /// different spaces, InvalidArgument for duplicate labels.
  MeasureFamily(std::vector<std::string> labels, std::vector<Measure> members);
  /// Members labelled "1", "2", ...
  explicit MeasureFamily(std::vector<Measure> members);

  const MeasurableSpace& space() const noexcept { return members_.front().space(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Measure>& members() const noexcept { return members_; }
  const Measure& member(std::size_t i) const { return members_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

private:
  void validate() const;

  std::vector<std::string> labels_;
  std::vector<Measure> members_;
};

/// An element of the partition-assignment space: a partition of X together
/// with one family member (by index) per block.
class PartitionAssignment {
public:
  /// Throws InvalidArgument unless there is one in-range member index per
  /// block.
  PartitionAssignment(Partition partition, std::vector<std::size_t> members, std::size_t family_size);

  const Partition& partition() const noexcept { return partition_; }
  const std::vector<std::size_t>& members() const noexcept { return members_; }

  /// sum over blocks k of mu_{members[k]}(A & B_k)
  ExtNonneg objective(const MeasureFamily& f, const MeasurableSet& a) const;

  /// "[{a}->1, {b}->2]"
  std::string to_string(const MeasureFamily& f) const;

private:
  Partition partition_;
  std::vector<std::size_t> members_;
};

Measure meet2(const Measure& m, const Measure& n);
Measure join2(const Measure& m, const Measure& n);

Measure meet_family(const MeasureFamily& f);
Measure join_family(const MeasureFamily& f);

/// Cap on |family|^n for index_partition_formula.
inline constexpr std::uint64_t kDefaultAssignmentCap = std::uint64_t{1} << 22;

/// The infimum over partitions {B_i} of X indexed by the family itself
/// (possibly empty blocks, one per member) of sum_i mu_i(A & B_i). Such a
/// partition is a map from atoms to members, and all |family|^n maps are
/// enumerated. On a finite space this agrees with meet_family; the formula
/// only fails for uncountable index sets, where measures stop being additive
/// over the blocks.
ExtNonneg index_partition_formula(const MeasureFamily& f, const MeasurableSet& a,
                                  std::uint64_t cap = kDefaultAssignmentCap);

/// m - (n - m)^-, computed through the Jordan decomposition of n - m.
/// Requires every weight of m to be finite; throws UndefinedDifference
/// naming the atom otherwise.
Measure meet_via_jordan(const Measure& m, const Measure& n);
/// m + (n - m)^+, with the same precondition.
Measure join_via_jordan(const Measure& m, const Measure& n);

} // namespace measlat
