#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jicert/errors.hpp"
#include "jicert/permutation.hpp"

namespace jicert {

/// How a group is held in memory.
///
/// `dense` keeps the full sorted element table and unlocks the exhaustive
/// lattice and subgroup searches. `chain` keeps only a stabilizer chain
/// (order and membership), for groups too large to enumerate.
enum class Mode
{
  dense,
  chain
};

inline constexpr std::uint64_t kDefaultDenseBound = 2'000'000;
inline constexpr std::uint64_t kDefaultSubgroupBound = 2000;

std::string to_string(Mode m);

namespace detail {
struct GroupData;
class DenseEngine;
class StabChain;
} // namespace detail

/// Immutable handle to a permutation group. Copies share state; lazily built
/// caches (stabilizer chain, element index) are constructed once and are safe
/// to request from several threads.
class PermGroup
{
public:
  /// Trivial group of degree 0.
  PermGroup();

  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                   Mode mode = Mode::dense,
                                   std::uint64_t dense_bound = kDefaultDenseBound);

  /// Dense group from an already enumerated, sorted, closed element list.
  /// The caller guarantees closure; only sortedness and degrees are checked.
  static PermGroup from_sorted_elements(std::size_t degree, std::vector<Permutation> gens,
                                        std::vector<Permutation> elements,
                                        std::uint64_t dense_bound = kDefaultDenseBound);

  static PermGroup trivial(std::size_t degree, Mode mode = Mode::dense);

  std::size_t degree() const;
  std::span<const Permutation> generators() const;
  Mode mode() const;
  std::uint64_t dense_bound() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(Permutation const &g) const;

  /// Sorted element table; throws NeedsDenseMode for chain-mode groups.
  std::vector<Permutation> const &elements() const;

  /// Every generator of `*this` lies in `other` (same degree required).
  bool is_subgroup_of(PermGroup const &other) const;

  /// Same degree and the same set of elements.
  bool same_group(PermGroup const &other) const;

  /// Re-host the same generators in another mode.
  PermGroup with_mode(Mode mode) const;

  detail::StabChain const &chain() const;
  detail::DenseEngine const &engine() const;

  /// Throws NeedsDenseMode naming `what` unless this group is dense.
  void require_dense(char const *what) const;

private:
  explicit PermGroup(std::shared_ptr<detail::GroupData const> d);
  std::shared_ptr<detail::GroupData const> data_;
};

/// Builds a group from generators of the given degree. In dense mode the
/// order is computed first and DenseBoundExceeded is thrown when it is above
/// `dense_bound`.
PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                Mode mode = Mode::dense,
                                std::uint64_t dense_bound = kDefaultDenseBound);

/// Dense if the order fits within `dense_bound`, chain otherwise.
Mode auto_mode(std::size_t degree, std::span<const Permutation> gens,
               std::uint64_t dense_bound = kDefaultDenseBound);

} // namespace jicert
