#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jicert/permutation.hpp"

namespace jicert::detail {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Points listed in `forced_base` become the first base points (in that
/// order) even if the group fixes them, so that `stabilizer_generators(k)`
/// generates the pointwise stabilizer of the first k forced points. Further
/// base points are appended on demand.
class StabChain
{
public:
  StabChain(std::size_t degree, std::span<const Permutation> generators,
            std::vector<Point> forced_base = {});

  std::size_t degree() const noexcept { return degree_; }
  std::size_t length() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

  /// Product of the fundamental orbit lengths; throws Error on 64-bit overflow.
  std::uint64_t order() const;

  bool contains(Permutation const &g) const;

  /// Sift `g` through levels [from, to). Returns the residue and the level at
  /// which sifting stopped (`to` when it went all the way through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from,
                                            std::size_t to) const;

  /// Strong generators fixing the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

private:
  struct Level
  {
    Point base;
    std::vector<Permutation> gens;     // S^(i): strong generators fixing earlier base points
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;    // point -> index into orbit/transversal, or -1
    std::vector<Permutation> transversal;
  };

  void rebuild_orbit(Level &lvl);
  void run();

  std::size_t degree_;
  std::vector<Level> levels_;
};

} // namespace jicert::detail
