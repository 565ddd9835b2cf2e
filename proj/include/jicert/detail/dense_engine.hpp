#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "jicert/detail/element_set.hpp"
#include "jicert/perm_group.hpp"

namespace jicert::detail {

/// A subgroup of a dense ambient group, in element-index coordinates.
struct Sub
{
  ElementSet bits;
  std::vector<std::uint32_t> gens;
  std::uint64_t order = 1;
};

/// Sort key used everywhere a deterministic order of subgroups is needed:
/// by order, then by the lexicographic order of the sorted element lists.
bool canonical_less(Sub const &a, Sub const &b);

/// One conjugacy class of subgroups. `rep` is the member with the least
/// canonical element list; `members[k] == rep^conjugators[k]`.
struct SubgroupClass
{
  Sub rep;
  std::vector<ElementSet> members;
  std::vector<std::uint32_t> conjugators;
  bool normal() const { return members.size() == 1; }
};

/// Index-based arithmetic over the element table of a dense group.
///
/// Element 0 is always the identity (it is the least permutation). When the
/// group has at most kTableBound elements a full multiplication table is kept.
class DenseEngine
{
public:
  static constexpr std::size_t kTableBound = 4096;

  explicit DenseEngine(PermGroup const &g);

  std::size_t size() const noexcept { return elems_->size(); }
  Permutation const &element(std::uint32_t i) const { return (*elems_)[i]; }
  std::optional<std::uint32_t> find(Permutation const &p) const;
  std::uint32_t index_of(Permutation const &p) const;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const
  {
    if (!table_.empty())
      return table_[static_cast<std::size_t>(a) * size() + b];
    return slow_mul(a, b);
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// g^-1 a g
  std::uint32_t conj(std::uint32_t a, std::uint32_t g) const { return mul(mul(inv_[g], a), g); }
  /// a^-1 b^-1 a b
  std::uint32_t comm(std::uint32_t a, std::uint32_t b) const
  {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  std::uint64_t element_order(std::uint32_t a) const;

  std::span<const std::uint32_t> generators() const noexcept { return gens_; }

  Sub trivial() const;
  Sub whole() const;
  Sub closure(Sub const &base, std::span<const std::uint32_t> extra) const;
  Sub generated(std::span<const std::uint32_t> gens) const;
  /// Smallest subgroup containing `gens` and normalised by `conjugators`.
  Sub normal_closure(std::span<const std::uint32_t> gens,
                     std::span<const std::uint32_t> conjugators) const;
  /// Normal closure in the whole ambient group.
  Sub normal_closure(std::span<const std::uint32_t> gens) const;
  Sub from_bits(ElementSet const &bits) const;
  Sub from_group(PermGroup const &h) const;
  Sub intersect(Sub const &a, Sub const &b) const;
  Sub join(Sub const &a, Sub const &b) const { return closure(a, b.gens); }
  PermGroup to_group(Sub const &s) const;

  bool is_normal(Sub const &h) const;
  bool normalizes(std::span<const std::uint32_t> by, Sub const &h) const;
  bool commute(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const;
  ElementSet conjugate(ElementSet const &s, std::uint32_t g) const;
  std::vector<std::uint32_t> conjugate_gens(std::span<const std::uint32_t> gens,
                                            std::uint32_t g) const;

  /// { g : [a, g] in bottom for every generator a of top }.
  Sub section_centralizer(Sub const &top, Sub const &bottom) const;

  std::vector<std::vector<std::uint32_t>> const &conjugacy_classes() const;
  /// Every normal subgroup, sorted by canonical_less.
  std::vector<Sub> const &normal_lattice() const;
  /// Every conjugacy class of subgroups, sorted by canonical_less of the reps.
  std::vector<SubgroupClass> const &subgroup_classes() const;

private:
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const;
  void build_table();

  std::vector<Permutation> const *elems_;
  std::uint64_t dense_bound_;
  std::size_t degree_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> lookup_;
  std::vector<std::uint32_t> gens_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint16_t> table_;
  std::vector<std::vector<std::uint32_t>> conj_tab_;

  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<std::uint32_t>> classes_;
  mutable std::once_flag lattice_once_;
  mutable std::vector<Sub> lattice_;
  mutable std::once_flag subgroups_once_;
  mutable std::vector<SubgroupClass> subgroups_;
};

} // namespace jicert::detail
