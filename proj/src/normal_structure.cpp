#include "jicert/normal_structure.hpp"

#include <algorithm>
#include <regex>

#include "jicert/detail/dense_engine.hpp"
#include "jicert/group_ops.hpp"
#include "jicert/homomorphism.hpp"

namespace jicert {

using detail::DenseEngine;
using detail::Sub;

namespace {

DenseEngine const &dense(PermGroup const &g, char const *what)
{
  g.require_dense(what);
  return g.engine();
}

bool proper_subset(Sub const &a, Sub const &b)
{
  return a.order < b.order && a.bits.subset_of(b.bits);
}

Sub normal_sub(DenseEngine const &e, PermGroup const &h, char const *name)
{
  Sub s = e.from_group(h);
  if (!e.is_normal(s))
    throw PreconditionError(std::string(name) + " is not normal");
  return s;
}

std::vector<PermGroup> to_groups(DenseEngine const &e, std::vector<Sub> const &subs)
{
  std::vector<PermGroup> out;
  out.reserve(subs.size());
  for (auto const &s : subs)
    out.push_back(e.to_group(s));
  return out;
}

std::vector<Sub> minimal_nontrivial(std::vector<Sub> const &lattice)
{
  std::vector<Sub> out;
  for (auto const &n : lattice) {
    if (n.order == 1)
      continue;
    bool minimal = std::none_of(lattice.begin(), lattice.end(), [&](Sub const &m) {
      return m.order > 1 && proper_subset(m, n);
    });
    if (minimal)
      out.push_back(n);
  }
  return out;
}

std::vector<Sub> maximal_proper(std::vector<Sub> const &lattice, std::uint64_t whole)
{
  std::vector<Sub> out;
  for (auto const &n : lattice) {
    if (n.order == whole)
      continue;
    bool maximal = std::none_of(lattice.begin(), lattice.end(), [&](Sub const &m) {
      return m.order < whole && proper_subset(n, m);
    });
    if (maximal)
      out.push_back(n);
  }
  return out;
}

bool chief(std::vector<Sub> const &lattice, Sub const &top, Sub const &bottom)
{
  if (!proper_subset(bottom, top))
    return false;
  return std::none_of(lattice.begin(), lattice.end(), [&](Sub const &n) {
    return proper_subset(bottom, n) && proper_subset(n, top);
  });
}

std::uint64_t prime_of_power(std::uint64_t n, std::size_t &exponent)
{
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      exponent = 0;
      while (n % p == 0) {
        n /= p;
        ++exponent;
      }
      return n == 1 ? p : 0;
    }
  }
  exponent = 1;
  return n;
}

SimpleTypeId cyclic_type(std::uint64_t p)
{
  return {"C" + std::to_string(p), p, true, {{1, 1}, {p, p - 1}}};
}

SimpleTypeId abelian_factor(Fingerprint const &fp, std::size_t &multiplicity)
{
  std::size_t k = 0;
  std::uint64_t p = prime_of_power(fp.order, k);
  bool exponent_p = std::all_of(fp.element_orders.begin(), fp.element_orders.end(),
                                [&](auto const &kv) { return kv.first == 1 || kv.first == p; });
  if (p == 0 || !exponent_p)
    throw PreconditionError("abelian group of order " + std::to_string(fp.order) +
                            " is not elementary abelian");
  multiplicity = k;
  return cyclic_type(p);
}

} // namespace

std::vector<SimpleGroupInfo> const &nonabelian_simple_catalogue()
{
  static std::vector<SimpleGroupInfo> const table = {
    {"A5", 60},
    {"PSL(2,7)", 168},
    {"A6", 360},
    {"PSL(2,8)", 504},
    {"PSL(2,11)", 660},
    {"PSL(2,13)", 1092},
    {"PSL(2,17)", 2448},
    {"A7", 2520},
    {"PSL(2,19)", 3420},
    {"PSL(2,16)", 4080},
    {"PSL(3,3)", 5616},
    {"PSU(3,3)", 6048},
    {"PSL(2,23)", 6072},
    {"PSL(2,25)", 7800},
    {"M11", 7920},
    {"PSL(2,27)", 9828},
    {"PSL(2,29)", 12180},
    {"PSL(2,31)", 14880},
    {"A8", 20160},
    {"PSL(3,4)", 20160},
    {"PSL(2,37)", 25308},
    {"PSU(4,2)", 25920},
    {"Sz(8)", 29120},
    {"PSL(2,32)", 32736},
    {"PSL(2,41)", 34440},
    {"PSL(2,43)", 39732},
    {"PSL(2,47)", 51888},
    {"PSL(2,49)", 58800},
    {"PSU(3,4)", 62400},
    {"PSL(2,53)", 74412},
    {"M12", 95040},
    {"PSL(2,59)", 102660},
    {"PSL(2,61)", 113460},
    {"PSU(3,5)", 126000},
    {"PSL(2,67)", 150348},
    {"J1", 175560},
    {"PSL(2,71)", 178920},
    {"A9", 181440},
    {"PSL(2,73)", 194472},
    {"PSL(2,79)", 246480},
    {"PSL(2,64)", 262080},
    {"PSL(2,81)", 265680},
    {"PSL(2,83)", 285852},
    {"PSL(2,89)", 352440},
    {"PSL(3,5)", 372000},
    {"M22", 443520},
    {"PSL(2,97)", 456288},
    {"PSL(2,101)", 515100},
    {"PSL(2,103)", 546312},
    {"J2", 604800},
    {"PSL(2,107)", 612468},
    {"PSL(2,109)", 647460},
    {"PSL(2,113)", 721392},
    {"PSL(2,121)", 885720},
    {"PSL(2,125)", 976500},
    {"PSp(4,4)", 979200},
  };
  return table;
}

SimpleTypeId simple_type_by_name(std::string const &name)
{
  static std::regex const cyclic(R"(^C(\d+)$)");
  std::smatch m;
  if (std::regex_match(name, m, cyclic)) {
    std::uint64_t p = std::stoull(m[1].str());
    if (!is_prime(p))
      throw PreconditionError("C" + m[1].str() + " is not simple");
    return cyclic_type(p);
  }
  for (auto const &info : nonabelian_simple_catalogue()) {
    if (name == info.name)
      return {info.name, info.order, false, {}};
  }
  throw PreconditionError("unknown simple group '" + name + "'");
}

std::vector<PermGroup> normal_subgroups(PermGroup const &g)
{
  auto const &e = dense(g, "normal_subgroups");
  return to_groups(e, e.normal_lattice());
}

std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &g)
{
  auto const &e = dense(g, "minimal_normal_subgroups");
  if (g.is_trivial())
    throw PreconditionError("the trivial group has no minimal normal subgroup");
  return to_groups(e, minimal_nontrivial(e.normal_lattice()));
}

std::vector<PermGroup> maximal_normal_subgroups(PermGroup const &g)
{
  auto const &e = dense(g, "maximal_normal_subgroups");
  if (g.is_trivial())
    throw PreconditionError("the trivial group has no maximal normal subgroup");
  return to_groups(e, maximal_proper(e.normal_lattice(), e.size()));
}

CriticalityResult is_critical_pair(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  auto const &e = dense(g, "is_critical_pair");
  Sub as = normal_sub(e, a, "A");
  Sub bs = normal_sub(e, b, "B");
  if (!proper_subset(bs, as))
    throw PreconditionError("B must be a proper subgroup of A");
  for (auto const &n : e.normal_lattice()) {
    if (proper_subset(n, as) && !n.bits.subset_of(bs.bits))
      return {false, e.to_group(n)};
  }
  return {true, std::nullopt};
}

std::vector<CriticalPair> critical_pairs(PermGroup const &g)
{
  auto const &e = dense(g, "critical_pairs");
  auto const &lattice = e.normal_lattice();
  std::vector<CriticalPair> out;
  for (auto const &a : lattice) {
    if (a.order == 1)
      continue;
    Sub b = e.trivial();
    for (auto const &n : lattice) {
      if (proper_subset(n, a) && !n.bits.subset_of(b.bits))
        b = e.join(b, n);
    }
    if (b.order < a.order)
      out.push_back({g, e.to_group(a), e.to_group(b)});
  }
  return out;
}

bool is_chief_factor(PermGroup const &g, PermGroup const &top, PermGroup const &bottom)
{
  auto const &e = dense(g, "is_chief_factor");
  return chief(e.normal_lattice(), normal_sub(e, top, "top"), normal_sub(e, bottom, "bottom"));
}

CriticalPair find_critical_refinement(PermGroup const &g, PermGroup const &k, PermGroup const &l)
{
  auto const &e = dense(g, "find_critical_refinement");
  Sub ks = normal_sub(e, k, "K");
  Sub ls = normal_sub(e, l, "L");
  auto const &lattice = e.normal_lattice();
  if (!chief(lattice, ks, ls))
    throw PreconditionError("K/L is not a chief factor");

  std::vector<Sub const *> candidates;
  for (auto const &n : lattice) {
    if (n.bits.subset_of(ks.bits) && !n.bits.subset_of(ls.bits))
      candidates.push_back(&n);
  }
  // The lattice is sorted by canonical_less, so the first minimal candidate is the least one.
  Sub const *pick = nullptr;
  for (auto const *c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](Sub const *d) { return proper_subset(*d, *c); });
    if (minimal) {
      pick = c;
      break;
    }
  }
  if (!pick)
    throw ExhaustionFailure("no normal subgroup inside K avoids L");

  Sub meet = e.intersect(*pick, ls);
  Sub product = e.join(*pick, ls);
  if (!(product.bits == ks.bits))
    throw ExhaustionFailure("refinement does not satisfy AL = K");
  PermGroup a = e.to_group(*pick);
  PermGroup am = e.to_group(meet);
  if (!(section_fingerprint(g, a, am) == section_fingerprint(g, k, l)))
    throw ExhaustionFailure("refinement factor differs from K/L");
  if (!(e.section_centralizer(*pick, meet).bits == e.section_centralizer(ks, ls).bits))
    throw ExhaustionFailure("refinement changes the section centralizer");
  return {g, std::move(a), std::move(am)};
}

Fingerprint fingerprint(PermGroup const &g)
{
  return section_fingerprint(g, g, PermGroup::trivial(g.degree()));
}

Fingerprint section_fingerprint(PermGroup const &g, PermGroup const &x, PermGroup const &y)
{
  auto const &e = dense(g, "section_fingerprint");
  Sub xs = e.from_group(x);
  Sub ys = e.from_group(y);
  if (!ys.bits.subset_of(xs.bits) || !e.normalizes(xs.gens, ys))
    throw PreconditionError("Y is not a normal subgroup of X");
  Fingerprint fp;
  fp.order = xs.order / ys.order;
  xs.bits.for_each([&](std::uint32_t v) {
    std::uint64_t k = 1;
    for (std::uint32_t cur = v; !ys.bits.test(cur); cur = e.mul(cur, v))
      ++k;
    ++fp.element_orders[k];
  });
  for (auto &kv : fp.element_orders)
    kv.second /= ys.order;
  for (std::size_t i = 0; i < xs.gens.size() && fp.abelian; ++i) {
    for (std::size_t j = i + 1; j < xs.gens.size(); ++j) {
      if (!ys.bits.test(e.comm(xs.gens[i], xs.gens[j]))) {
        fp.abelian = false;
        break;
      }
    }
  }
  return fp;
}

SimpleTypeId identify_simple_type(PermGroup const &s)
{
  auto const &e = dense(s, "identify_simple_type");
  if (s.is_trivial())
    throw PreconditionError("the trivial group is not simple");
  if (e.normal_lattice().size() != 2)
    throw PreconditionError("group of order " + std::to_string(s.order()) + " is not simple");
  std::uint64_t n = s.order();
  if (is_prime(n))
    return cyclic_type(n);
  Fingerprint fp = fingerprint(s);
  std::vector<SimpleGroupInfo> same_order;
  for (auto const &info : nonabelian_simple_catalogue()) {
    if (info.order == n)
      same_order.push_back(info);
  }
  std::string name;
  if (same_order.size() == 1) {
    name = same_order.front().name;
  } else if (n == 20160) {
    // A8 has elements of order 15; PSL(3,4) has none.
    name = fp.element_orders.count(15) ? "A8" : "PSL(3,4)";
  } else {
    name = "Simple(" + std::to_string(n) + ")";
  }
  return {name, n, false, fp.element_orders};
}

std::pair<SimpleTypeId, std::size_t> decompose_char_simple(PermGroup const &q)
{
  dense(q, "decompose_char_simple");
  if (q.is_trivial())
    throw PreconditionError("the trivial group has no simple factor");
  Fingerprint fp = fingerprint(q);
  if (fp.abelian) {
    std::size_t k = 0;
    SimpleTypeId t = abelian_factor(fp, k);
    return {t, k};
  }
  auto mins = minimal_normal_subgroups(q);
  std::optional<SimpleTypeId> type;
  for (auto const &m : mins) {
    SimpleTypeId t;
    try {
      t = identify_simple_type(m);
    } catch (PreconditionError const &) {
      throw PreconditionError("group is not a direct power of a simple group");
    }
    if (type && !(*type == t))
      throw PreconditionError("group is not a direct power of a simple group");
    type = t;
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < mins.size(); ++i)
    total *= type->order;
  if (total != q.order())
    throw PreconditionError("group is not a direct power of a simple group");
  return {*type, mins.size()};
}

ChiefFactorDesc describe_chief_factor(PermGroup const &g, PermGroup const &top,
                                      PermGroup const &bottom)
{
  if (!is_chief_factor(g, top, bottom))
    throw PreconditionError("not a chief factor");
  ChiefFactorDesc d{top, bottom, {}, 1};
  Fingerprint fp = section_fingerprint(g, top, bottom);
  if (fp.abelian) {
    d.simple_type = abelian_factor(fp, d.multiplicity);
    return d;
  }
  PermGroup q = top;
  if (!bottom.is_trivial()) {
    auto [quo, proj] = quotient(g, bottom);
    q = hom_image(proj, top);
  }
  std::tie(d.simple_type, d.multiplicity) = decompose_char_simple(q);
  return d;
}

std::vector<PermGroup> chief_series(PermGroup const &g)
{
  auto const &e = dense(g, "chief_series");
  auto const &lattice = e.normal_lattice();
  std::vector<Sub const *> series{&lattice.front()};
  while (series.back()->order < e.size()) {
    // Sorted by order, so the first normal subgroup above the current term is minimal over it.
    for (auto const &n : lattice) {
      if (proper_subset(*series.back(), n)) {
        series.push_back(&n);
        break;
      }
    }
  }
  std::vector<PermGroup> out;
  for (auto const *s : series)
    out.push_back(e.to_group(*s));
  return out;
}

std::vector<ChiefFactorDesc> chief_factors(PermGroup const &g)
{
  auto series = chief_series(g);
  std::vector<ChiefFactorDesc> out;
  for (std::size_t i = 1; i < series.size(); ++i)
    out.push_back(describe_chief_factor(g, series[i], series[i - 1]));
  return out;
}

FactorMultiset composition_factors(PermGroup const &g)
{
  FactorMultiset out;
  for (auto const &f : chief_factors(g)) {
    SimpleTypeId key = f.simple_type;
    key.fingerprint.clear();
    out[key] += f.multiplicity;
  }
  return out;
}

std::optional<std::vector<PermGroup>> central_decomposition(PermGroup const &g)
{
  auto const &e = dense(g, "central_decomposition");
  // Both factors of a central product are normal, so pairs of proper normal
  // subgroups cover every decomposition.
  auto const &lattice = e.normal_lattice();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    auto const &n = lattice[i];
    if (n.order == 1 || n.order == e.size())
      continue;
    for (std::size_t j = i + 1; j < lattice.size(); ++j) {
      auto const &m = lattice[j];
      if (m.order == e.size())
        continue;
      std::uint64_t meet = (n.bits & m.bits).count();
      if (n.order * m.order != e.size() * meet)
        continue;
      if (e.commute(n.gens, m.gens))
        return std::vector<PermGroup>{e.to_group(n), e.to_group(m)};
    }
  }
  return std::nullopt;
}

std::pair<PermGroup, PermGroup> centdec_witness(PermGroup const &g, PermGroup const &k,
                                                PermGroup const &l)
{
  auto const &e = dense(g, "centdec_witness");
  if (!central_decomposition(g))
    throw PreconditionError("G is not centrally decomposable");
  Sub ks = e.from_group(k);
  Sub z = e.section_centralizer(e.whole(), e.trivial());
  if (ks.bits.subset_of(z.bits))
    throw PreconditionError("K is central");
  Sub ls = normal_sub(e, l, "L");
  if (ls.order == 1)
    throw PreconditionError("L is trivial and has no maximal normal subgroup");

  std::vector<Sub> maxl;
  for (auto const &m : maximal_normal_subgroups(e.to_group(ls)))
    maxl.push_back(e.from_group(m));
  for (auto const &h : e.normal_lattice()) {
    if (ks.bits.subset_of(h.bits))
      continue;
    for (auto const &m : maxl) {
      if (!h.bits.subset_of(m.bits))
        return {e.to_group(h), e.to_group(m)};
    }
  }
  throw ExhaustionFailure("no normal H and maximal normal M of L separate K");
}

} // namespace jicert
