#include "jicert/detail/dense_engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace jicert::detail {

bool canonical_less(Sub const &a, Sub const &b)
{
  if (a.order != b.order)
    return a.order < b.order;
  return a.bits.lex_less_same_size(b.bits);
}

namespace {

bool is_prime_power(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      return n == 1;
    }
  }
  return true;
}

} // namespace

DenseEngine::DenseEngine(PermGroup const &g)
: elems_(&g.elements()), dense_bound_(g.dense_bound()), degree_(g.degree())
{
  std::size_t n = elems_->size();
  lookup_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i)
    lookup_.emplace((*elems_)[i], static_cast<std::uint32_t>(i));

  for (auto const &p : g.generators())
    gens_.push_back(index_of(p));

  inv_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    inv_[i] = index_of((*elems_)[i].inverse());

  if (n <= kTableBound)
    build_table();

  conj_tab_.resize(gens_.size());
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    conj_tab_[s].resize(n);
    for (std::size_t i = 0; i < n; ++i)
      conj_tab_[s][i] = conj(static_cast<std::uint32_t>(i), gens_[s]);
  }
}

void DenseEngine::build_table()
{
  // Columns are filled along a BFS tree of the right Cayley graph:
  // e_i * e_k = (e_i * e_parent) * g where e_k = e_parent * g.
  std::size_t n = size();
  std::vector<std::vector<std::uint32_t>> right(gens_.size(), std::vector<std::uint32_t>(n));
  for (std::size_t s = 0; s < gens_.size(); ++s) {
    for (std::size_t i = 0; i < n; ++i)
      right[s][i] = index_of((*elems_)[i] * (*elems_)[gens_[s]]);
  }
  table_.assign(n * n, 0);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint32_t> via(n, 0);
  std::vector<std::uint32_t> order{0};
  parent[0] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t s = 0; s < gens_.size(); ++s) {
      std::uint32_t y = right[s][order[k]];
      if (parent[y] < 0) {
        parent[y] = order[k];
        via[y] = static_cast<std::uint32_t>(s);
        order.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    table_[i * n] = static_cast<std::uint16_t>(i);
  for (std::size_t k = 1; k < order.size(); ++k) {
    std::uint32_t col = order[k];
    auto const &r = right[via[col]];
    std::size_t pcol = static_cast<std::size_t>(parent[col]);
    for (std::size_t i = 0; i < n; ++i)
      table_[i * n + col] = static_cast<std::uint16_t>(r[table_[i * n + pcol]]);
  }
}

std::optional<std::uint32_t> DenseEngine::find(Permutation const &p) const
{
  auto it = lookup_.find(p);
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

std::uint32_t DenseEngine::index_of(Permutation const &p) const
{
  auto i = find(p);
  if (!i)
    throw PreconditionError("permutation " + p.to_cycle_string() + " is not in the group");
  return *i;
}

std::uint32_t DenseEngine::slow_mul(std::uint32_t a, std::uint32_t b) const
{
  return lookup_.at((*elems_)[a] * (*elems_)[b]);
}

std::uint64_t DenseEngine::element_order(std::uint32_t a) const
{
  std::uint64_t k = 1;
  for (std::uint32_t x = a; x != 0; x = mul(x, a))
    ++k;
  return a == 0 ? 1 : k;
}

Sub DenseEngine::trivial() const
{
  Sub s;
  s.bits = ElementSet(size());
  s.bits.set(0);
  s.order = 1;
  return s;
}

Sub DenseEngine::whole() const
{
  Sub s = generated(gens_);
  return s;
}

Sub DenseEngine::closure(Sub const &base, std::span<const std::uint32_t> extra) const
{
  // Dimino: adjoin one generator at a time, growing by right cosets of the
  // previous subgroup.
  Sub cur = base;
  for (std::uint32_t s : extra) {
    if (cur.bits.test(s))
      continue;
    std::vector<std::uint32_t> old = cur.bits.members();
    cur.gens.push_back(s);
    std::vector<std::uint32_t> reps{0};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::uint32_t g : cur.gens) {
        std::uint32_t y = mul(reps[r], g);
        if (cur.bits.test(y))
          continue;
        reps.push_back(y);
        for (std::uint32_t h : old)
          cur.bits.set(mul(h, y));
      }
    }
    cur.order = old.size() * reps.size();
  }
  return cur;
}

Sub DenseEngine::generated(std::span<const std::uint32_t> gens) const
{
  return closure(trivial(), gens);
}

Sub DenseEngine::normal_closure(std::span<const std::uint32_t> gens,
                                std::span<const std::uint32_t> conjugators) const
{
  Sub n = generated(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n.gens.size(); ++i) {
      for (std::uint32_t t : conjugators) {
        std::uint32_t c = conj(n.gens[i], t);
        if (!n.bits.test(c)) {
          std::uint32_t one[] = {c};
          n = closure(n, one);
          changed = true;
        }
      }
    }
  }
  return n;
}

Sub DenseEngine::normal_closure(std::span<const std::uint32_t> gens) const
{
  Sub n = generated(gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n.gens.size(); ++i) {
      for (auto const &tab : conj_tab_) {
        std::uint32_t c = tab[n.gens[i]];
        if (!n.bits.test(c)) {
          std::uint32_t one[] = {c};
          n = closure(n, one);
          changed = true;
        }
      }
    }
  }
  return n;
}

Sub DenseEngine::from_bits(ElementSet const &bits) const
{
  Sub cur = trivial();
  bits.for_each([&](std::uint32_t i) {
    if (!cur.bits.test(i)) {
      std::uint32_t one[] = {i};
      cur = closure(cur, one);
    }
  });
  if (!(cur.bits == bits))
    throw PreconditionError("element set is not a subgroup");
  return cur;
}

Sub DenseEngine::from_group(PermGroup const &h) const
{
  if (h.degree() != degree_)
    throw PreconditionError("subgroup degree does not match ambient degree");
  std::vector<std::uint32_t> gi;
  for (auto const &p : h.generators()) {
    auto i = find(p);
    if (!i)
      throw PreconditionError("generator " + p.to_cycle_string() + " is not in the ambient group");
    gi.push_back(*i);
  }
  return generated(gi);
}

Sub DenseEngine::intersect(Sub const &a, Sub const &b) const
{
  return from_bits(a.bits & b.bits);
}

PermGroup DenseEngine::to_group(Sub const &s) const
{
  std::vector<Permutation> elems;
  elems.reserve(s.order);
  s.bits.for_each([&](std::uint32_t i) { elems.push_back((*elems_)[i]); });
  std::vector<Permutation> gens;
  for (auto g : s.gens)
    gens.push_back((*elems_)[g]);
  return PermGroup::from_sorted_elements(degree_, std::move(gens), std::move(elems), dense_bound_);
}

bool DenseEngine::is_normal(Sub const &h) const
{
  for (auto x : h.gens) {
    for (auto const &tab : conj_tab_) {
      if (!h.bits.test(tab[x]))
        return false;
    }
  }
  return true;
}

bool DenseEngine::normalizes(std::span<const std::uint32_t> by, Sub const &h) const
{
  for (auto x : h.gens) {
    for (auto t : by) {
      if (!h.bits.test(conj(x, t)))
        return false;
    }
  }
  return true;
}

bool DenseEngine::commute(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) const
{
  for (auto x : a) {
    for (auto y : b) {
      if (mul(x, y) != mul(y, x))
        return false;
    }
  }
  return true;
}

ElementSet DenseEngine::conjugate(ElementSet const &s, std::uint32_t g) const
{
  ElementSet r(size());
  std::uint32_t gi = inv_[g];
  s.for_each([&](std::uint32_t x) { r.set(mul(mul(gi, x), g)); });
  return r;
}

std::vector<std::uint32_t> DenseEngine::conjugate_gens(std::span<const std::uint32_t> gens,
                                                       std::uint32_t g) const
{
  std::vector<std::uint32_t> out;
  out.reserve(gens.size());
  for (auto x : gens)
    out.push_back(conj(x, g));
  return out;
}

Sub DenseEngine::section_centralizer(Sub const &top, Sub const &bottom) const
{
  ElementSet bits(size());
  for (std::uint32_t g = 0; g < size(); ++g) {
    bool ok = true;
    for (auto a : top.gens) {
      if (!bottom.bits.test(comm(a, g))) {
        ok = false;
        break;
      }
    }
    if (ok)
      bits.set(g);
  }
  return from_bits(bits);
}

std::vector<std::vector<std::uint32_t>> const &DenseEngine::conjugacy_classes() const
{
  std::call_once(classes_once_, [this] {
    std::vector<bool> done(size(), false);
    for (std::uint32_t i = 0; i < size(); ++i) {
      if (done[i])
        continue;
      std::vector<std::uint32_t> cls{i};
      done[i] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (auto const &tab : conj_tab_) {
          std::uint32_t c = tab[cls[k]];
          if (!done[c]) {
            done[c] = true;
            cls.push_back(c);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  });
  return classes_;
}

std::vector<Sub> const &DenseEngine::normal_lattice() const
{
  std::call_once(lattice_once_, [this] {
    // Every normal subgroup is the join of the normal closures of the
    // conjugacy classes it contains.
    std::vector<Sub> atoms;
    std::unordered_set<ElementSet, ElementSetHash> atom_seen;
    for (auto const &cls : conjugacy_classes()) {
      if (cls.front() == 0)
        continue;
      std::uint32_t one[] = {cls.front()};
      Sub a = normal_closure(one);
      if (atom_seen.insert(a.bits).second)
        atoms.push_back(std::move(a));
    }
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<Sub> out{trivial()};
    seen.insert(out.front().bits);
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (auto const &a : atoms) {
        if (a.bits.subset_of(out[k].bits))
          continue;
        Sub j = closure(out[k], a.gens);
        if (seen.insert(j.bits).second)
          out.push_back(std::move(j));
      }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    lattice_ = std::move(out);
  });
  return lattice_;
}

std::vector<SubgroupClass> const &DenseEngine::subgroup_classes() const
{
  std::call_once(subgroups_once_, [this] {
    // Cyclic extension: every subgroup is generated by its cyclic subgroups of
    // prime-power order, so joining those one at a time reaches all of them.
    // Only one representative per conjugacy class is extended.
    std::vector<std::uint32_t> cyclic_gens;
    {
      std::unordered_set<ElementSet, ElementSetHash> seen;
      for (std::uint32_t x = 1; x < size(); ++x) {
        if (!is_prime_power(element_order(x)))
          continue;
        std::uint32_t one[] = {x};
        Sub c = generated(one);
        if (seen.insert(c.bits).second)
          cyclic_gens.push_back(x);
      }
    }

    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<SubgroupClass> out;
    auto add_class = [&](Sub const &k) {
      SubgroupClass cls;
      cls.members.push_back(k.bits);
      cls.conjugators.push_back(0);
      seen.insert(k.bits);
      for (std::size_t m = 0; m < cls.members.size(); ++m) {
        for (std::size_t s = 0; s < conj_tab_.size(); ++s) {
          ElementSet img(size());
          cls.members[m].for_each([&](std::uint32_t x) { img.set(conj_tab_[s][x]); });
          if (seen.insert(img).second) {
            cls.members.push_back(std::move(img));
            cls.conjugators.push_back(mul(cls.conjugators[m], gens_[s]));
          }
        }
      }
      std::size_t best = 0;
      for (std::size_t m = 1; m < cls.members.size(); ++m) {
        if (cls.members[m].lex_less_same_size(cls.members[best]))
          best = m;
      }
      cls.rep.bits = cls.members[best];
      cls.rep.gens = conjugate_gens(k.gens, cls.conjugators[best]);
      cls.rep.order = k.order;
      std::uint32_t back = inv_[cls.conjugators[best]];
      for (auto &c : cls.conjugators)
        c = mul(back, c);
      out.push_back(std::move(cls));
    };

    add_class(trivial());
    for (std::size_t idx = 0; idx < out.size(); ++idx) {
      for (std::uint32_t z : cyclic_gens) {
        Sub const &h = out[idx].rep;
        if (h.bits.test(z))
          continue;
        std::uint32_t one[] = {z};
        Sub k = closure(h, one);
        if (seen.count(k.bits))
          continue;
        add_class(k);
      }
    }
    std::sort(out.begin(), out.end(), [](SubgroupClass const &a, SubgroupClass const &b) {
      return canonical_less(a.rep, b.rep);
    });
    subgroups_ = std::move(out);
  });
  return subgroups_;
}

} // namespace jicert::detail
