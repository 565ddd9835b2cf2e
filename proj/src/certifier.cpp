#include "jicert/certifier.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "jicert/detail/dense_engine.hpp"
#include "jicert/group_ops.hpp"

namespace jicert {

using detail::DenseEngine;
using detail::ElementSet;
using detail::Sub;

namespace {

Witness witness(std::string role, PermGroup const &h)
{
  return {std::move(role), {h.generators().begin(), h.generators().end()}};
}

Witness witness(std::string role, Permutation const &x)
{
  return {std::move(role), {x}};
}

Witness witness(std::string role, DenseEngine const &e, Sub const &s)
{
  Witness w{std::move(role), {}};
  for (auto i : s.gens)
    w.generators.push_back(e.element(i));
  return w;
}

CheckResult inconclusive(std::string detail)
{
  return {CheckStatus::inconclusive, std::move(detail), {}};
}

CheckResult not_applicable(std::string detail)
{
  return {CheckStatus::not_applicable, std::move(detail), {}};
}

/// Reason a subgroup search cannot run on `g`, if any.
std::optional<std::string> search_blocked(PermGroup const &g, std::uint64_t bound)
{
  if (g.mode() != Mode::dense)
    return "bounded search: needs dense mode";
  if (g.order() > bound)
    return "bounded search: order " + std::to_string(g.order()) + " exceeds subgroup bound " +
           std::to_string(bound);
  return std::nullopt;
}

void require_normal(PermGroup const &g, PermGroup const &h, char const *name)
{
  if (!h.is_subgroup_of(g) || !is_normal(g, h))
    throw PreconditionError(std::string(name) + " is not a normal subgroup");
}

bool subset(Sub const &a, Sub const &b) { return a.bits.subset_of(b.bits); }

/// A non-normal subgroup whose distinct conjugates commute elementwise,
/// together with the normal subgroup its conjugates generate.
struct CommutingFamily
{
  Sub u;
  Sub closure;
};

std::vector<CommutingFamily> commuting_families(DenseEngine const &e)
{
  std::vector<CommutingFamily> out;
  for (auto const &cls : e.subgroup_classes()) {
    if (cls.normal())
      continue;
    auto const &rep = cls.rep;
    bool ok = true;
    // [U^x, U^y] = [U, U^(y x^-1)]^x, so testing U against each conjugate is enough.
    for (std::size_t k = 0; k < cls.members.size() && ok; ++k) {
      if (cls.members[k] == rep.bits)
        continue;
      ok = e.commute(rep.gens, e.conjugate_gens(rep.gens, cls.conjugators[k]));
    }
    if (ok)
      out.push_back({rep, e.normal_closure(rep.gens)});
  }
  return out;
}

std::string join_stages(std::vector<std::size_t> const &v)
{
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "}";
}

/// Runs `f`, turning a NeedsDenseMode into an inconclusive result.
template<typename F>
CheckResult guarded(F &&f)
{
  try {
    return f();
  } catch (NeedsDenseMode const &ex) {
    return inconclusive(std::string("needs dense mode: ") + ex.what());
  }
}

/// Conjugates of U under G, by orbit of the generating list.
std::vector<PermGroup> conjugates(PermGroup const &g, PermGroup const &u)
{
  std::vector<PermGroup> orbit{u};
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const &x : g.generators()) {
      std::vector<Permutation> gens;
      for (auto const &y : orbit[i].generators())
        gens.push_back(y.conjugate_by(x));
      PermGroup c = subgroup_generated(g, gens);
      bool seen = std::any_of(orbit.begin(), orbit.end(),
                              [&](PermGroup const &o) { return o.same_group(c); });
      if (!seen)
        orbit.push_back(c);
    }
  }
  return orbit;
}

bool conjugates_commute(PermGroup const &g, PermGroup const &u)
{
  auto conj = conjugates(g, u);
  for (std::size_t i = 0; i < conj.size(); ++i) {
    for (std::size_t j = i + 1; j < conj.size(); ++j) {
      for (auto const &x : conj[i].generators()) {
        for (auto const &y : conj[j].generators()) {
          if (x * y != y * x)
            return false;
        }
      }
    }
  }
  return true;
}

} // namespace

std::string to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::not_applicable: return "not_applicable";
  case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus check_status_from_string(std::string const &s)
{
  for (auto st : {CheckStatus::pass, CheckStatus::fail, CheckStatus::not_applicable,
                  CheckStatus::inconclusive}) {
    if (to_string(st) == s)
      return st;
  }
  throw PreconditionError("unknown check status '" + s + "'");
}

CheckResult check_critical_pair(PermGroup const &g, PermGroup const &a, PermGroup const &b)
{
  require_normal(g, a, "A");
  require_normal(g, b, "B");
  if (!b.is_subgroup_of(a))
    return {CheckStatus::fail, "B is not contained in A", {witness("b_outside_a", b)}};
  if (b.order() == a.order())
    return {CheckStatus::fail, "degenerate pair: B = A", {witness("degenerate", a)}};
  return guarded([&] {
    auto r = is_critical_pair(g, a, b);
    if (r.critical)
      return CheckResult{CheckStatus::pass, "critical", {}};
    return CheckResult{CheckStatus::fail,
                       "a normal subgroup of order " + std::to_string(r.witness->order()) +
                           " lies strictly inside A but not in B",
                       {witness("normal_subgroup", *r.witness)}};
  });
}

CheckResult check_centralizer_condition(PermGroup const &g, PermGroup const &p, PermGroup const &b)
{
  require_normal(g, b, "B");
  if (!p.is_subgroup_of(g))
    throw PreconditionError("P is not a subgroup");
  for (auto const &x : p.generators()) {
    if (!b.contains(x))
      return {CheckStatus::fail, "P is not contained in B",
              {witness("element", x), witness("p", p)}};
  }
  return guarded([&] {
    PermGroup c = centralizer(g, p);
    for (auto const &x : c.generators()) {
      if (!b.contains(x))
        return CheckResult{CheckStatus::fail,
                           "C(P) has order " + std::to_string(c.order()) + " and leaves B",
                           {witness("element", x), witness("p", p)}};
    }
    return CheckResult{CheckStatus::pass, "P C(P) lies in B", {}};
  });
}

StageVerdict check_reid_stage(GroupHom const &rho, PermGroup const &a_next, PermGroup const &a,
                              PermGroup const &b)
{
  if (!rho.is_surjective())
    throw PreconditionError("the connecting map is not surjective");
  PermGroup const &g = rho.target();
  require_normal(g, b, "B");
  if (b.order() == g.order())
    throw PreconditionError("B must be a proper subgroup");
  require_normal(rho.source(), a_next, "the next A");
  StageVerdict v;
  v.order = g.order();
  v.checks[checks::critical_pair] = check_critical_pair(g, a, b);
  v.checks[checks::centralizer] = check_centralizer_condition(g, hom_image(rho, a_next), b);
  return v;
}

StageVerdict check_wilson_stage(PermGroup const &g, PermGroup const &k, std::uint64_t subgroup_bound)
{
  require_normal(g, k, "K");
  StageVerdict v;
  v.order = g.order();
  auto &containment = v.checks[checks::wilson_containment];
  auto &generation = v.checks[checks::wilson_generation];
  if (g.mode() != Mode::dense) {
    containment = inconclusive("needs dense mode");
    generation = inconclusive("needs dense mode");
    v.notes.push_back("chain mode: lattice and subgroup searches skipped");
    return v;
  }
  auto const &e = g.engine();
  Sub ks = e.from_group(k);
  containment = {CheckStatus::pass, "every normal subgroup outside K contains K", {}};
  for (auto const &l : e.normal_lattice()) {
    if (!subset(l, ks) && !subset(ks, l)) {
      containment = {CheckStatus::fail,
                     "a normal subgroup of order " + std::to_string(l.order) +
                         " is not inside K and does not contain K",
                     {witness("normal_subgroup", e, l)}};
      break;
    }
  }
  if (auto why = search_blocked(g, subgroup_bound)) {
    generation = inconclusive(*why);
    v.notes.push_back(*why);
    return v;
  }
  v.notes.push_back("subgroup search exhaustive");
  generation = {CheckStatus::pass, "no commuting conjugate family generates a normal subgroup outside K",
                {}};
  for (auto const &f : commuting_families(e)) {
    if (!subset(f.closure, ks)) {
      generation = {CheckStatus::fail,
                    "the conjugates of a non-normal subgroup commute and generate a normal "
                    "subgroup of order " +
                        std::to_string(f.closure.order) + " outside K",
                    {witness("subgroup", e, f.u), witness("normal_closure", e, f.closure)}};
      break;
    }
  }
  return v;
}

StageVerdict check_star_stage(PermGroup const &g, PermGroup const &a, std::uint64_t subgroup_bound)
{
  require_normal(g, a, "A");
  StageVerdict v;
  v.order = g.order();
  auto &r = v.checks[checks::commuting_conjugates];
  if (auto why = search_blocked(g, subgroup_bound)) {
    r = inconclusive(*why);
    v.notes.push_back(*why);
    return v;
  }
  v.notes.push_back("subgroup search exhaustive");
  auto const &e = g.engine();
  Sub as = e.from_group(a);
  r = {CheckStatus::pass, "no non-normal commuting conjugate family covers A", {}};
  for (auto const &f : commuting_families(e)) {
    if (subset(as, f.closure)) {
      r = {CheckStatus::fail,
           "a non-normal subgroup of order " + std::to_string(f.u.order) +
               " has commuting conjugates generating a subgroup containing A",
           {witness("subgroup", e, f.u), witness("normal_closure", e, f.closure)}};
      break;
    }
  }
  return v;
}

StageVerdict check_thmb_stage(PermGroup const &g, PermGroup const &a, PermGroup const &b,
                              std::optional<PermGroup> const &p, std::uint64_t subgroup_bound)
{
  require_normal(g, a, "A");
  require_normal(g, b, "B");
  StageVerdict v;
  v.order = g.order();
  auto &dich = v.checks[checks::normalised_dichotomy];
  auto &indec = v.checks[checks::central_indecomposable];
  v.notes.push_back("criticality is checked in this stage only; being the image of a critical "
                    "pair of the limit cannot be checked on a prefix");

  if (!p) {
    dich = not_applicable("no next stage, so P is undefined");
  } else if (auto why = search_blocked(g, subgroup_bound)) {
    dich = inconclusive(*why);
    v.notes.push_back(*why);
  } else {
    require_normal(g, *p, "P");
    v.notes.push_back("subgroup search exhaustive");
    auto const &e = g.engine();
    Sub ps = e.from_group(*p);
    Sub pc = e.join(ps, e.from_group(centralizer(g, *p)));
    std::vector<Sub> maxes;
    if (!a.is_trivial()) {
      for (auto const &m : maximal_normal_subgroups(a))
        maxes.push_back(e.from_group(m));
    }
    Sub as = e.from_group(a);
    dich = {CheckStatus::pass, "every subgroup normalised by A satisfies the dichotomy", {}};
    // Both alternatives are invariant under conjugation in G, so class
    // representatives suffice.
    for (auto const &cls : e.subgroup_classes()) {
      auto const &t = cls.rep;
      if (!e.normalizes(as.gens, t) || subset(pc, t))
        continue;
      auto escaped = std::find_if(maxes.begin(), maxes.end(),
                                  [&](Sub const &m) { return !subset(t, m); });
      if (escaped != maxes.end()) {
        dich = {CheckStatus::fail,
                "a subgroup of order " + std::to_string(t.order) +
                    " normalised by A neither contains P C(P) nor lies in every maximal normal "
                    "subgroup of A",
                {witness("subgroup", e, t), witness("maximal_normal_of_a", e, *escaped)}};
        break;
      }
    }
  }

  indec = guarded([&] {
    auto const &e = g.engine();
    Sub as = e.from_group(a);
    for (auto const &n : e.normal_lattice()) {
      if (!subset(as, n))
        continue;
      PermGroup ng = e.to_group(n);
      if (auto dec = central_decomposition(ng)) {
        return CheckResult{CheckStatus::fail,
                           "a normal subgroup of order " + std::to_string(n.order) +
                               " containing A is centrally decomposable",
                           {witness("normal_subgroup", ng), witness("factor", (*dec)[0]),
                            witness("factor", (*dec)[1])}};
      }
    }
    return CheckResult{CheckStatus::pass,
                       "no normal subgroup containing A is centrally decomposable", {}};
  });
  return v;
}

CheckResult check_class_factor(PermGroup const &g, PermGroup const &a, PermGroup const &b,
                               SimpleClass const &cls)
{
  require_normal(g, a, "A");
  require_normal(g, b, "B");
  return guarded([&] {
    if (!b.is_subgroup_of(a) || b.order() == a.order() || !is_chief_factor(g, a, b))
      return CheckResult{CheckStatus::fail, "A/B is not a chief factor",
                         {witness("a", a), witness("b", b)}};
    auto d = describe_chief_factor(g, a, b);
    std::string shape = d.simple_type.name + "^" + std::to_string(d.multiplicity);
    if (cls.contains(d.simple_type))
      return CheckResult{CheckStatus::pass, "A/B is " + shape, {}};
    return CheckResult{CheckStatus::fail, "A/B is " + shape + ", outside the class",
                       {witness("a", a), witness("b", b)}};
  });
}

bool verify_critlem(PermGroup const &g, CriticalPair const &pair, PermGroup const &k)
{
  require_normal(g, k, "K");
  if (!is_critical_pair(g, pair.a, pair.b).critical)
    throw PreconditionError("the pair is not critical");
  PermGroup c = centralizer_of_section(g, pair.a, pair.b);
  if (k.is_subgroup_of(c))
    return true;
  return pair.a.is_subgroup_of(k) && !is_nilpotent(k);
}

OpschVerdict check_opsch(PermGroup const &g, std::uint64_t p, SchurTable const &table)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
  g.require_dense("check_opsch");
  OpschVerdict v;
  v.p_chief_factors_central = true;
  v.multipliers_coprime = true;
  std::vector<std::string> missing;
  std::string pname = "C" + std::to_string(p);
  for (auto const &f : chief_factors(g)) {
    if (f.simple_type.abelian) {
      if (f.simple_type.name != pname)
        continue;
      v.has_p_chief_factor = true;
      if (!commutator_subgroup(g, g, f.top).is_subgroup_of(f.bottom))
        v.p_chief_factors_central = false;
      continue;
    }
    auto m = table.multiplier(f.simple_type);
    if (!m)
      missing.push_back(f.simple_type.name);
    else if (*m % p == 0)
      v.multipliers_coprime = false;
  }
  if (!v.has_p_chief_factor || !v.p_chief_factors_central || !v.multipliers_coprime) {
    v.status = CheckStatus::not_applicable;
    v.detail = !v.has_p_chief_factor       ? "no chief factor of exponent " + std::to_string(p)
               : !v.p_chief_factors_central ? "a chief factor of exponent " + std::to_string(p) +
                                                  " is not central"
                                            : "a composition factor has multiplier divisible by " +
                                                  std::to_string(p);
    return v;
  }
  if (!missing.empty()) {
    v.status = CheckStatus::inconclusive;
    v.detail = "table-incomplete: " + missing.front() + " is not in the Schur table";
    return v;
  }
  PermGroup ep = e_p_subgroup(g, p);
  v.status = ep.order() < g.order() ? CheckStatus::pass : CheckStatus::fail;
  v.detail = "E^" + std::to_string(p) + " has order " + std::to_string(ep.order()) + " in a group of order " +
             std::to_string(g.order());
  return v;
}

SystemPrefix derive_reid_from_wilson(SystemPrefix const &prefix)
{
  if (prefix.stages.empty())
    throw PreconditionError("the system has no stages");
  SystemPrefix out = prefix;
  std::size_t top = prefix.size() - 1;
  PermGroup const &g = prefix.stages[top].group;
  g.require_dense("derive_reid_from_wilson");
  auto const &e = g.engine();
  auto const &lattice = e.normal_lattice();

  // to_stage[n]: G_top -> G_n, for n < top.
  std::vector<std::optional<GroupHom>> to_stage(prefix.size());
  for (std::size_t n = top; n-- > 0;) {
    if (!prefix.stages[n + 1].map)
      throw PreconditionError("stage " + std::to_string(n + 1) + " has no map");
    to_stage[n] = n + 1 == top ? *prefix.stages[n + 1].map
                               : to_stage[n + 1]->then(*prefix.stages[n + 1].map);
  }
  auto image_at = [&](std::size_t n, Sub const &r) {
    PermGroup rg = e.to_group(r);
    return n == top ? rg : hom_image(*to_stage[n], rg);
  };

  // level[n] = ker(G_top -> G_{n-1}); level[0] = G_top.
  std::vector<Sub> level(prefix.size() + 1);
  level[0] = e.whole();
  for (std::size_t n = 1; n <= top; ++n)
    level[n] = e.from_group(hom_kernel(*to_stage[n - 1]));
  level[top + 1] = e.trivial();

  std::vector<Sub> chosen(prefix.size());
  for (std::size_t n = 1; n <= top; ++n) {
    Sub const &s = level[n];
    Sub const *best = nullptr;
    int best_rank = -1;
    for (auto const &r : lattice) {
      if (r.order <= s.order || !subset(s, r))
        continue;
      bool minimal = std::none_of(lattice.begin(), lattice.end(), [&](Sub const &m) {
        return m.order > s.order && m.order < r.order && subset(s, m) && subset(m, r);
      });
      if (!minimal)
        continue;
      Sub c = e.section_centralizer(r, s);
      if (subset(level[n - 1], c))
        continue;
      bool critical = std::none_of(lattice.begin(), lattice.end(), [&](Sub const &m) {
        return m.order < r.order && subset(m, r) && !subset(m, s);
      });
      int rank = (critical ? 2 : 0) + (subset(c, level[n - 1]) ? 1 : 0);
      if (rank > best_rank) {
        best_rank = rank;
        best = &r;
      }
    }
    if (!best)
      throw HypothesisError("level " + std::to_string(n) +
                                ": every minimal normal subgroup over the kernel is central in "
                                "the previous kernel",
                            n);
    chosen[n] = *best;
    out.stages[n].a_mark = image_at(n, *best);
  }

  PermGroup const &g0 = prefix.stages[0].group;
  auto pairs = critical_pairs(g0);
  if (pairs.empty())
    throw HypothesisError("level 0: the coarsest stage has no critical pair", 0);
  CriticalPair pick = pairs.front();
  if (top >= 1) {
    PermGroup p0 = image_at(0, chosen[1]);
    PermGroup pc = join(g0, p0, centralizer(g0, p0));
    auto fit = std::find_if(pairs.begin(), pairs.end(),
                            [&](CriticalPair const &cp) { return pc.is_subgroup_of(cp.b); });
    if (fit != pairs.end())
      pick = *fit;
  }
  out.stages[0].a_mark = pick.a;
  out.stages[0].b0 = pick.b;
  return out;
}

namespace {

StageVerdict certify_stage(SystemPrefix const &prefix, std::size_t n, CertifyOptions const &opt)
{
  auto const &st = prefix.stages[n];
  PermGroup const &g = st.group;
  std::size_t last = prefix.size() - 1;
  auto b = prefix.b(n);
  auto p = prefix.p(n);

  StageVerdict v;
  v.stage = n;
  v.order = g.order();
  if (g.mode() != Mode::dense)
    v.notes.push_back("chain mode: lattice and subgroup searches need dense mode");

  auto merge = [&](StageVerdict const &part) {
    for (auto const &[name, r] : part.checks)
      v.checks[name] = r;
    for (auto const &note : part.notes) {
      if (std::find(v.notes.begin(), v.notes.end(), note) == v.notes.end())
        v.notes.push_back(note);
    }
  };

  std::string no_ab = !st.a_mark ? "no A mark at this stage" : "B_0 not supplied";
  if (st.a_mark && b)
    v.checks[checks::critical_pair] = check_critical_pair(g, *st.a_mark, *b);
  else
    v.checks[checks::critical_pair] = not_applicable(no_ab);

  if (n == last)
    v.checks[checks::centralizer] = not_applicable("last stage: P needs a next stage");
  else if (!b)
    v.checks[checks::centralizer] = not_applicable("B_0 not supplied");
  else if (!p)
    v.checks[checks::centralizer] = not_applicable("no A mark at the next stage");
  else
    v.checks[checks::centralizer] = check_centralizer_condition(g, *p, *b);

  if (opt.star) {
    if (st.a_mark)
      merge(check_star_stage(g, *st.a_mark, opt.subgroup_bound));
    else
      v.checks[checks::commuting_conjugates] = not_applicable("no A mark at this stage");
  }

  if (opt.wilson) {
    if (n == 0) {
      v.checks[checks::wilson_containment] = not_applicable("stage 0 has no kernel");
      v.checks[checks::wilson_generation] = not_applicable("stage 0 has no kernel");
    } else {
      merge(check_wilson_stage(g, *st.kernel, opt.subgroup_bound));
    }
  }

  if (opt.thmb) {
    if (st.a_mark && b) {
      merge(check_thmb_stage(g, *st.a_mark, *b, p, opt.subgroup_bound));
    } else {
      v.checks[checks::normalised_dichotomy] = not_applicable(no_ab);
      v.checks[checks::central_indecomposable] = not_applicable(no_ab);
    }
  }

  if (opt.simple_class) {
    if (st.a_mark && b)
      v.checks[checks::class_factor] = check_class_factor(g, *st.a_mark, *b, *opt.simple_class);
    else
      v.checks[checks::class_factor] = not_applicable(no_ab);
    if (g.mode() == Mode::dense)
      v.class_factor_count = count_class_factors(g, *opt.simple_class);
  }
  return v;
}

struct CriterionDef
{
  char const *name;
  char const *conclusion;
  std::vector<char const *> checks;
  /// Check whose presence switches the criterion on.
  char const *trigger;
  /// How the criterion quantifies over stages.
  enum { cofinite, every, infinitely_many } quantifier;
};

std::vector<CriterionDef> const &criterion_defs()
{
  static const std::vector<CriterionDef> defs{
      {"critical-pair criterion", "just infinite and not virtually pronilpotent",
       {checks::critical_pair, checks::centralizer}, checks::critical_pair,
       CriterionDef::cofinite},
      {"commuting-conjugates condition",
       "hereditarily just infinite, together with the critical-pair criterion",
       {checks::commuting_conjugates}, checks::commuting_conjugates,
       CriterionDef::infinitely_many},
      {"Wilson criterion", "just infinite, and virtually abelian or hereditarily just infinite",
       {checks::wilson_containment, checks::wilson_generation}, checks::wilson_containment,
       CriterionDef::every},
      {"strengthened criterion",
       "the form every just infinite group that is not virtually pro-p admits",
       {checks::critical_pair, checks::centralizer, checks::normalised_dichotomy,
        checks::central_indecomposable, checks::class_factor},
       checks::normalised_dichotomy, CriterionDef::cofinite},
  };
  return defs;
}

} // namespace

SystemVerdict certify_system(SystemPrefix const &prefix, CertifyOptions const &options)
{
  if (prefix.stages.empty())
    throw PreconditionError("the system has no stages");
  for (std::size_t n = 1; n < prefix.size(); ++n) {
    if (!prefix.stages[n].kernel)
      throw PreconditionError("stage " + std::to_string(n) + " has no kernel; validate the prefix first");
  }

  std::vector<std::future<StageVerdict>> jobs;
  for (std::size_t n = 0; n < prefix.size(); ++n)
    jobs.push_back(std::async(std::launch::async, certify_stage, std::cref(prefix), n,
                              std::cref(options)));
  SystemVerdict out;
  for (auto &j : jobs)
    out.stages.push_back(j.get());

  if (options.simple_class) {
    ClassReport cr;
    cr.members = options.simple_class->to_string();
    auto sv = schur_closure_check(*options.simple_class, SchurTable::builtin());
    cr.schur_closed = sv.pass;
    cr.schur_detail = sv.detail;
    for (auto const &st : out.stages) {
      if (st.class_factor_count)
        cr.counts.push_back(*st.class_factor_count);
    }
    for (std::size_t i = 1; i < cr.counts.size(); ++i)
      cr.strictly_increasing = cr.strictly_increasing && cr.counts[i] > cr.counts[i - 1];
    out.class_report = cr;
  }
  summarize(out);
  return out;
}

void summarize(SystemVerdict &verdict)
{
  verdict.summary.clear();
  verdict.limit_claims.clear();
  for (auto const &def : criterion_defs()) {
    bool present = std::any_of(verdict.stages.begin(), verdict.stages.end(),
                               [&](StageVerdict const &s) { return s.checks.contains(def.trigger); });
    if (!present)
      continue;
    CriterionSummary cs;
    cs.criterion = def.name;
    for (auto const *c : def.checks)
      cs.checks.push_back(c);
    for (auto const &s : verdict.stages) {
      bool any_fail = false, any_inc = false, any_na = false, any = false;
      for (auto const *c : def.checks) {
        auto it = s.checks.find(c);
        if (it == s.checks.end())
          continue;
        any = true;
        any_fail |= it->second.status == CheckStatus::fail;
        any_inc |= it->second.status == CheckStatus::inconclusive;
        any_na |= it->second.status == CheckStatus::not_applicable;
      }
      if (!any)
        continue;
      if (any_fail)
        cs.failing_stages.push_back(s.stage);
      else if (any_inc)
        cs.inconclusive_stages.push_back(s.stage);
      else if (!any_na)
        cs.satisfied_stages.push_back(s.stage);
      else
        continue;
      cs.checked_stages.push_back(s.stage);
    }

    std::ostringstream claim;
    claim << def.name << ": ";
    if (cs.checked_stages.empty()) {
      claim << "no stage could be fully checked";
    } else if (cs.failing_stages.size() == cs.checked_stages.size()) {
      claim << "hypotheses fail at all checked stages " << join_stages(cs.failing_stages);
    } else if (cs.failing_stages.empty() && cs.inconclusive_stages.empty()) {
      claim << "all checked stages " << join_stages(cs.checked_stages)
            << " satisfy the hypotheses; the conclusion (" << def.conclusion
            << ") applies to any limit whose further stages continue to satisfy them";
    } else {
      if (!cs.failing_stages.empty()) {
        claim << "hypotheses fail at stages " << join_stages(cs.failing_stages);
        if (def.quantifier == CriterionDef::every)
          claim << " and the criterion requires every stage";
        else
          claim << ", an explicit finite exception set";
      }
      if (!cs.inconclusive_stages.empty()) {
        if (!cs.failing_stages.empty())
          claim << "; ";
        claim << "inconclusive at stages " << join_stages(cs.inconclusive_stages)
              << " (bounded search)";
      }
      if (!cs.satisfied_stages.empty())
        claim << "; satisfied at stages " << join_stages(cs.satisfied_stages);
    }
    if (def.quantifier == CriterionDef::infinitely_many && !cs.satisfied_stages.empty())
      claim << "; the condition is needed only at infinitely many stages, which a finite prefix "
               "cannot witness";
    verdict.limit_claims.push_back(claim.str());
    verdict.summary.push_back(std::move(cs));
  }
}

CheckStatus overall_status(SystemVerdict const &verdict)
{
  bool inc = false;
  for (auto const &s : verdict.stages) {
    for (auto const &[name, r] : s.checks) {
      if (r.status == CheckStatus::fail)
        return CheckStatus::fail;
      inc |= r.status == CheckStatus::inconclusive;
    }
  }
  return inc ? CheckStatus::inconclusive : CheckStatus::pass;
}

bool witness_reproduces(SystemPrefix const &prefix, StageVerdict const &verdict,
                        std::string const &check_name, SimpleClass const *cls)
{
  auto it = verdict.checks.find(check_name);
  if (it == verdict.checks.end() || it->second.status != CheckStatus::fail ||
      verdict.stage >= prefix.size())
    return false;
  auto const &st = prefix.stages[verdict.stage];
  PermGroup const &g = st.group;
  auto const &ws = it->second.witnesses;
  auto sub = [&](std::size_t i) { return subgroup_generated(g, ws.at(i).generators); };
  auto role = [&](std::size_t i) { return i < ws.size() ? ws[i].role : std::string(); };
  auto b = prefix.b(verdict.stage);
  auto const &a = st.a_mark;

  if (check_name == checks::critical_pair) {
    if (!a || !b)
      return false;
    if (role(0) == "degenerate")
      return sub(0).same_group(*a) && a->same_group(*b);
    if (role(0) == "b_outside_a")
      return sub(0).same_group(*b) && !b->is_subgroup_of(*a);
    PermGroup n = sub(0);
    return is_normal(g, n) && n.is_subgroup_of(*a) && n.order() < a->order() &&
           !n.is_subgroup_of(*b);
  }
  if (check_name == checks::centralizer) {
    auto p = prefix.p(verdict.stage);
    if (!b || !p || ws.size() < 2 || ws[0].generators.size() != 1)
      return false;
    Permutation const &x = ws[0].generators[0];
    if (!sub(1).same_group(*p) || b->contains(x) || !g.contains(x))
      return false;
    bool centralises = std::all_of(p->generators().begin(), p->generators().end(),
                                   [&](Permutation const &y) { return x * y == y * x; });
    return p->contains(x) || centralises;
  }
  if (check_name == checks::commuting_conjugates || check_name == checks::wilson_generation) {
    PermGroup u = sub(0);
    if (is_normal(g, u) || !conjugates_commute(g, u))
      return false;
    PermGroup l = normal_closure(g, u);
    if (check_name == checks::commuting_conjugates)
      return a && a->is_subgroup_of(l);
    return st.kernel && !l.is_subgroup_of(*st.kernel);
  }
  if (check_name == checks::wilson_containment) {
    PermGroup l = sub(0);
    return st.kernel && is_normal(g, l) && !l.is_subgroup_of(*st.kernel) &&
           !st.kernel->is_subgroup_of(l);
  }
  if (check_name == checks::normalised_dichotomy) {
    auto p = prefix.p(verdict.stage);
    if (!a || !p)
      return false;
    PermGroup t = sub(0), m = sub(1);
    bool normalised = std::all_of(a->generators().begin(), a->generators().end(), [&](auto const &x) {
      return std::all_of(t.generators().begin(), t.generators().end(),
                         [&](auto const &y) { return t.contains(y.conjugate_by(x)); });
    });
    PermGroup pc = join(g, *p, centralizer(g, *p));
    auto maxes = maximal_normal_subgroups(*a);
    bool is_max = std::any_of(maxes.begin(), maxes.end(),
                              [&](PermGroup const &x) { return x.same_group(m); });
    return normalised && !pc.is_subgroup_of(t) && is_max && !t.is_subgroup_of(m);
  }
  if (check_name == checks::central_indecomposable) {
    if (!a || ws.size() < 3)
      return false;
    PermGroup n = sub(0), h = sub(1), k = sub(2);
    bool commute = std::all_of(h.generators().begin(), h.generators().end(), [&](auto const &x) {
      return std::all_of(k.generators().begin(), k.generators().end(),
                         [&](auto const &y) { return x * y == y * x; });
    });
    return is_normal(g, n) && a->is_subgroup_of(n) && h.is_subgroup_of(n) &&
           k.is_subgroup_of(n) && h.order() < n.order() && k.order() < n.order() && commute &&
           join(g, h, k).same_group(n);
  }
  if (check_name == checks::class_factor) {
    if (!cls || ws.size() < 2)
      return false;
    return check_class_factor(g, sub(0), sub(1), *cls).status == CheckStatus::fail;
  }
  return false;
}

} // namespace jicert
