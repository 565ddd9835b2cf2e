#include "jicert/group_ops.hpp"

#include <algorithm>

#include "jicert/detail/dense_engine.hpp"
#include "jicert/detail/stab_chain.hpp"
#include "jicert/homomorphism.hpp"

namespace jicert {

using detail::DenseEngine;
using detail::Sub;

namespace {

void require_subgroup(PermGroup const &g, PermGroup const &h, char const *name)
{
  if (!h.is_subgroup_of(g))
    throw PreconditionError(std::string(name) + " is not a subgroup of the ambient group");
}

std::vector<std::uint32_t> indices(DenseEngine const &e, std::span<const Permutation> ps)
{
  std::vector<std::uint32_t> out;
  out.reserve(ps.size());
  for (auto const &p : ps)
    out.push_back(e.index_of(p));
  return out;
}

PermGroup chain_group(PermGroup const &like, std::vector<Permutation> gens)
{
  return PermGroup::from_generators(like.degree(), std::move(gens), Mode::chain,
                                    like.dense_bound());
}

// Membership-only normal closure, used for chain-mode groups.
PermGroup chain_normal_closure(PermGroup const &like, std::vector<Permutation> gens,
                               std::span<const Permutation> conjugators)
{
  PermGroup n = chain_group(like, gens);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> cur(n.generators().begin(), n.generators().end());
    for (auto const &x : cur) {
      for (auto const &t : conjugators) {
        Permutation c = x.conjugate_by(t);
        if (!n.contains(c)) {
          gens.push_back(std::move(c));
          n = chain_group(like, gens);
          changed = true;
        }
      }
    }
  }
  return n;
}

} // namespace

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

PermGroup subgroup_generated(PermGroup const &g, std::span<const Permutation> elems)
{
  for (auto const &x : elems) {
    if (!g.contains(x))
      throw PreconditionError("element " + x.to_cycle_string() + " is not in the group");
  }
  if (g.mode() == Mode::dense) {
    auto const &e = g.engine();
    return e.to_group(e.generated(indices(e, elems)));
  }
  return chain_group(g, std::vector<Permutation>(elems.begin(), elems.end()));
}

PermGroup normal_closure(PermGroup const &g, PermGroup const &s)
{
  require_subgroup(g, s, "S");
  if (g.mode() == Mode::dense) {
    auto const &e = g.engine();
    return e.to_group(e.normal_closure(indices(e, s.generators())));
  }
  return chain_normal_closure(g, {s.generators().begin(), s.generators().end()}, g.generators());
}

PermGroup commutator_subgroup(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  require_subgroup(g, a, "A");
  require_subgroup(g, b, "B");
  std::vector<Permutation> comms;
  for (auto const &x : a.generators()) {
    for (auto const &y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  }
  std::vector<Permutation> conjugators(a.generators().begin(), a.generators().end());
  conjugators.insert(conjugators.end(), b.generators().begin(), b.generators().end());
  if (g.mode() == Mode::dense) {
    auto const &e = g.engine();
    return e.to_group(e.normal_closure(indices(e, comms), indices(e, conjugators)));
  }
  return chain_normal_closure(g, std::move(comms), conjugators);
}

PermGroup centralizer_of_section(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  g.require_dense("centralizer_of_section");
  require_subgroup(g, a, "A");
  require_subgroup(g, b, "B");
  if (!b.is_subgroup_of(a))
    throw PreconditionError("B is not contained in A");
  if (!is_normal(g, a) || !is_normal(g, b))
    throw PreconditionError("A and B must be normal in G");
  auto const &e = g.engine();
  return e.to_group(e.section_centralizer(e.from_group(a), e.from_group(b)));
}

PermGroup centralizer(PermGroup const &g, PermGroup const &h)
{
  g.require_dense("centralizer");
  require_subgroup(g, h, "H");
  auto const &e = g.engine();
  return e.to_group(e.section_centralizer(e.from_group(h), e.trivial()));
}

PermGroup center(PermGroup const &g)
{
  return centralizer(g, g);
}

std::vector<PermGroup> lower_central_series(PermGroup const &g)
{
  std::vector<PermGroup> series{g};
  while (true) {
    PermGroup next = commutator_subgroup(g, series.back(), g);
    if (next.order() == series.back().order())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(PermGroup const &g)
{
  return lower_central_series(g).back().is_trivial();
}

bool is_abelian(PermGroup const &g)
{
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
    }
  }
  return true;
}

bool is_normal(PermGroup const &g, PermGroup const &h)
{
  require_subgroup(g, h, "H");
  for (auto const &x : h.generators()) {
    for (auto const &t : g.generators()) {
      if (!h.contains(x.conjugate_by(t)))
        return false;
    }
  }
  return true;
}

PermGroup intersection(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  g.require_dense("intersection");
  auto const &e = g.engine();
  return e.to_group(e.intersect(e.from_group(a), e.from_group(b)));
}

PermGroup join(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  std::vector<Permutation> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(g, gens);
}

std::pair<PermGroup, GroupHom> quotient(PermGroup const &g, PermGroup const &n)
{
  g.require_dense("quotient");
  if (!is_normal(g, n))
    throw PreconditionError("N is not normal in G");
  auto const &e = g.engine();
  Sub ns = e.from_group(n);
  std::vector<std::uint32_t> nmem = ns.bits.members();
  std::size_t index = e.size() / nmem.size();
  if (index > g.dense_bound())
    throw DenseBoundExceeded("quotient degree exceeds the dense bound");

  std::vector<std::int64_t> coset(e.size(), -1);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < e.size(); ++x) {
    if (coset[x] >= 0)
      continue;
    for (auto m : nmem)
      coset[e.mul(m, x)] = static_cast<std::int64_t>(reps.size());
    reps.push_back(x);
  }

  auto action = [&](std::uint32_t gi) {
    std::vector<Point> imgs(index);
    for (std::size_t c = 0; c < index; ++c)
      imgs[c] = static_cast<Point>(coset[e.mul(reps[c], gi)]);
    return Permutation(std::move(imgs));
  };

  std::vector<Permutation> domain(g.generators().begin(), g.generators().end());
  std::vector<Permutation> images;
  for (auto const &p : domain)
    images.push_back(action(e.index_of(p)));

  // The coset action of every element is known, so Q is enumerated directly.
  std::vector<Permutation> qelems;
  qelems.reserve(index);
  for (auto r : reps)
    qelems.push_back(action(r));
  std::sort(qelems.begin(), qelems.end());
  PermGroup q = PermGroup::from_sorted_elements(index, images, std::move(qelems), g.dense_bound());
  GroupHom proj(g, q, std::move(domain), std::move(images));
  return {std::move(q), std::move(proj)};
}

PermGroup direct_product(PermGroup const &a, PermGroup const &b)
{
  std::size_t deg = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (auto const &x : a.generators())
    gens.push_back(x.shifted(0, deg));
  for (auto const &y : b.generators())
    gens.push_back(y.shifted(a.degree(), deg));
  std::uint64_t bound = std::min(a.dense_bound(), b.dense_bound());
  return PermGroup::from_generators(deg, gens, auto_mode(deg, gens, bound), bound);
}

PermGroup wreath_product(PermGroup const &base, PermGroup const &top)
{
  std::size_t bd = base.degree();
  std::size_t td = top.degree();
  std::size_t deg = bd * td;
  std::vector<Permutation> gens;

  // One copy of the base generators per orbit of the top group suffices.
  std::vector<bool> covered(td, false);
  for (std::size_t b = 0; b < td; ++b) {
    if (covered[b])
      continue;
    std::vector<std::size_t> orbit{b};
    covered[b] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto const &t : top.generators()) {
        std::size_t y = t[static_cast<Point>(orbit[k])];
        if (!covered[y]) {
          covered[y] = true;
          orbit.push_back(y);
        }
      }
    }
    for (auto const &x : base.generators())
      gens.push_back(x.shifted(b * bd, deg));
  }
  for (auto const &t : top.generators()) {
    std::vector<Point> imgs(deg);
    for (std::size_t b = 0; b < td; ++b) {
      for (std::size_t i = 0; i < bd; ++i)
        imgs[b * bd + i] = static_cast<Point>(t[static_cast<Point>(b)] * bd + i);
    }
    gens.emplace_back(std::move(imgs));
  }
  std::uint64_t bound = std::min(base.dense_bound(), top.dense_bound());
  return PermGroup::from_generators(deg, gens, auto_mode(deg, gens, bound), bound);
}

PermGroup e_p_subgroup(PermGroup const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  std::vector<Permutation> seeds;
  auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Permutation pw = gens[i].pow(static_cast<std::int64_t>(p));
    if (!pw.is_identity())
      seeds.push_back(std::move(pw));
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  }
  PermGroup s = subgroup_generated(g, seeds);
  return normal_closure(g, s);
}

} // namespace jicert
