#include "jicert/detail/stab_chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "jicert/errors.hpp"

namespace jicert::detail {

namespace {

std::size_t first_moved_level(std::vector<Point> const &base, Permutation const &g)
{
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (g[base[i]] != base[i])
      return i;
  }
  return base.size();
}

} // namespace

StabChain::StabChain(std::size_t degree, std::span<const Permutation> generators,
                     std::vector<Point> forced_base)
: degree_(degree)
{
  std::vector<Point> base;
  for (Point b : forced_base) {
    if (b >= degree || std::find(base.begin(), base.end(), b) != base.end())
      throw std::invalid_argument("forced base point out of range or repeated");
    base.push_back(b);
  }

  std::vector<Permutation> strong;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree does not match chain degree");
    if (g.is_identity())
      continue;
    if (first_moved_level(base, g) == base.size()) {
      for (Point x = 0; x < degree; ++x) {
        if (g[x] != x) {
          base.push_back(x);
          break;
        }
      }
    }
    strong.push_back(g);
  }

  levels_.resize(base.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    levels_[i].base = base[i];
  for (auto const &g : strong) {
    std::size_t j = first_moved_level(base, g);
    for (std::size_t i = 0; i <= j && i < levels_.size(); ++i)
      levels_[i].gens.push_back(g);
  }
  for (auto &lvl : levels_)
    rebuild_orbit(lvl);

  run();
}

void StabChain::rebuild_orbit(Level &lvl)
{
  lvl.orbit.assign(1, lvl.base);
  lvl.slot.assign(degree_, -1);
  lvl.slot[lvl.base] = 0;
  lvl.transversal.assign(1, Permutation(degree_));
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    Point beta = lvl.orbit[k];
    for (auto const &x : lvl.gens) {
      Point img = x[beta];
      if (lvl.slot[img] >= 0)
        continue;
      lvl.slot[img] = static_cast<std::int32_t>(lvl.orbit.size());
      lvl.orbit.push_back(img);
      lvl.transversal.push_back(lvl.transversal[k] * x);
    }
  }
}

void StabChain::run()
{
  std::size_t i = levels_.size();
  while (i > 0) {
    std::size_t const cur = i - 1;
    bool extended = false;
    for (std::size_t k = 0; k < levels_[cur].orbit.size() && !extended; ++k) {
      Point beta = levels_[cur].orbit[k];
      for (std::size_t s = 0; s < levels_[cur].gens.size(); ++s) {
        Level const &lvl = levels_[cur];
        Permutation const &x = lvl.gens[s];
        Point img = x[beta];
        Permutation h = lvl.transversal[k] * x * lvl.transversal[lvl.slot[img]].inverse();
        if (h.is_identity())
          continue;
        auto [y, j] = strip(std::move(h), cur + 1, levels_.size());
        if (y.is_identity())
          continue;
        if (j == levels_.size()) {
          Level fresh;
          for (Point p = 0; p < degree_; ++p) {
            if (y[p] != p) {
              fresh.base = p;
              break;
            }
          }
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = cur + 1; l <= j; ++l) {
          levels_[l].gens.push_back(y);
          rebuild_orbit(levels_[l]);
        }
        i = j + 1;
        extended = true;
        break;
      }
    }
    if (!extended)
      i = cur;
  }
}

std::uint64_t StabChain::order() const
{
  std::uint64_t n = 1;
  for (auto const &lvl : levels_) {
    if (__builtin_mul_overflow(n, static_cast<std::uint64_t>(lvl.orbit.size()), &n))
      throw Error("group order exceeds 64 bits");
  }
  return n;
}

std::pair<Permutation, std::size_t> StabChain::strip(Permutation g, std::size_t from,
                                                     std::size_t to) const
{
  for (std::size_t i = from; i < to && i < levels_.size(); ++i) {
    Level const &lvl = levels_[i];
    std::int32_t slot = lvl.slot[g[lvl.base]];
    if (slot < 0)
      return {std::move(g), i};
    if (slot > 0)
      g = g * lvl.transversal[slot].inverse();
  }
  return {std::move(g), std::min(to, levels_.size())};
}

bool StabChain::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    return false;
  return strip(g, 0, levels_.size()).first.is_identity();
}

std::vector<Permutation> StabChain::stabilizer_generators(std::size_t level) const
{
  if (level >= levels_.size())
    return {};
  return levels_[level].gens;
}

} // namespace jicert::detail
