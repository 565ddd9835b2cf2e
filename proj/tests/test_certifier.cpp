#include "doctest.h"

#include <algorithm>

#include "jicert/certifier.hpp"
#include "jicert/group_ops.hpp"
#include "jicert/library.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace jicert;

namespace {

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<Point>> c)
{
  return Permutation::from_cycles(n, c);
}

PermGroup gen(PermGroup const &g, std::vector<Permutation> elems) { return subgroup_generated(g, elems); }

oracle::Elems naive(PermGroup const &g)
{
  return oracle::closure(g.degree(), {g.generators().begin(), g.generators().end()});
}

PermGroup const &s4() { return corpus::get("S4").group; }
PermGroup v4() { return gen(s4(), {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})}); }
PermGroup a4() { return gen(s4(), {cyc(4, {{0, 1, 2}}), cyc(4, {{1, 2, 3}})}); }

/// The action on blocks of size `block` of a group preserving them.
GroupHom block_action(PermGroup const &g, PermGroup const &top, std::size_t block)
{
  std::vector<Permutation> imgs;
  for (auto const &x : g.generators()) {
    std::vector<Point> img(top.degree());
    for (std::size_t b = 0; b < top.degree(); ++b)
      img[b] = static_cast<Point>(x[static_cast<Point>(b * block)] / block);
    imgs.emplace_back(img);
  }
  return GroupHom(g, top, imgs);
}

/// S4 -> S3 through the action on the three pair partitions of {0,1,2,3}.
GroupHom s4_to_s3()
{
  PermGroup s3 = library::symmetric(3);
  return GroupHom(s4(), s3, {cyc(4, {{0, 1}}), cyc(4, {{0, 1, 2, 3}})},
                  {Permutation({0, 2, 1}), Permutation({2, 1, 0})});
}

SystemPrefix s4_s3_prefix()
{
  PermGroup s3 = library::symmetric(3);
  SystemPrefix sp;
  sp.stages.push_back({s3, gen(s3, {Permutation({1, 2, 0})}), gen(s3, {Permutation({1, 2, 0})}),
                       std::nullopt, std::nullopt});
  sp.stages.push_back({s4(), a4(), std::nullopt, s4_to_s3(), std::nullopt});
  validate_prefix(sp);
  return sp;
}

PermGroup cyclic2k(std::size_t n)
{
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i)
    img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup::from_generators(n, {Permutation(img)});
}

/// C2 <- C4 <- C8 <- C16, each stage above the first marked by its subgroup
/// of order 4, which makes the pair with the kernel critical.
SystemPrefix cyclic_tower()
{
  SystemPrefix sp;
  for (std::size_t n = 2; n <= 16; n *= 2) {
    PermGroup g = cyclic2k(n);
    PermGroup a = n == 2 ? g : subgroup_generated(g, std::vector{g.generators()[0].pow(static_cast<std::int64_t>(n / 4))});
    StageRecord st{g, a, std::nullopt, std::nullopt, std::nullopt};
    if (n == 2) {
      st.b0 = PermGroup::trivial(2);
    } else {
      auto const &prev = sp.stages.back().group;
      st.map = GroupHom(g, prev, {prev.generators()[0]});
    }
    sp.stages.push_back(st);
  }
  validate_prefix(sp);
  return sp;
}

SystemPrefix s3_wreath_prefix()
{
  PermGroup s3 = library::symmetric(3);
  PermGroup w = wreath_product(s3, s3);
  SystemPrefix sp;
  sp.stages.push_back({s3, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  sp.stages.push_back({w, std::nullopt, std::nullopt, block_action(w, s3, 3), std::nullopt});
  validate_prefix(sp);
  return sp;
}

CertifyOptions all_checks()
{
  CertifyOptions o;
  o.wilson = o.star = o.thmb = true;
  return o;
}

std::vector<std::string> const small = {"1",  "C2",  "C4",      "C6",    "C2^2",  "C2^3",
                                        "D8", "Q8",  "S3",      "S4",    "A4",    "C2xS3",
                                        "A5", "D10", "SL(2,3)", "C3^2",  "D12",   "C2xC4"};

} // namespace

TEST_CASE("critical-pair stage check on S4 over S3")
{
  PermGroup s3 = library::symmetric(3);
  PermGroup a3 = gen(s3, {Permutation({1, 2, 0})});
  auto v = check_reid_stage(s4_to_s3(), a4(), a3, a3);
  auto const &crit = v.checks.at(checks::critical_pair);
  CHECK(crit.status == CheckStatus::fail);
  REQUIRE(crit.witnesses.size() == 1);
  CHECK(crit.witnesses[0].role == "degenerate");
  CHECK(v.checks.at(checks::centralizer).status == CheckStatus::pass);
}

TEST_CASE("critical-pair stage check on a cyclic step fails the centralizer condition")
{
  PermGroup c8 = cyclic2k(8), c4 = cyclic2k(4);
  GroupHom rho(c8, c4, {c4.generators()[0]});
  PermGroup socle8 = gen(c8, {c8.generators()[0].pow(4)});
  PermGroup socle4 = gen(c4, {c4.generators()[0].pow(2)});
  auto v = check_reid_stage(rho, socle8, socle4, PermGroup::trivial(4));
  CHECK(v.checks.at(checks::critical_pair).status == CheckStatus::pass);
  auto const &cent = v.checks.at(checks::centralizer);
  CHECK(cent.status == CheckStatus::fail);
  REQUIRE(!cent.witnesses.empty());
  CHECK(!cent.witnesses[0].generators[0].is_identity());
}

TEST_CASE("critical-pair stage check preconditions")
{
  PermGroup s3 = library::symmetric(3);
  CHECK_THROWS_AS(check_reid_stage(s4_to_s3(), s4(), s3, s3), PreconditionError);
  PermGroup c4 = cyclic2k(4);
  GroupHom not_onto(cyclic2k(2), c4, {c4.generators()[0].pow(2)});
  CHECK_THROWS_AS(check_reid_stage(not_onto, cyclic2k(2), c4, PermGroup::trivial(4)),
                  PreconditionError);
}

TEST_CASE("star check examples")
{
  auto v = check_star_stage(s4(), v4());
  auto const &r = v.checks.at(checks::commuting_conjugates);
  CHECK(r.status == CheckStatus::fail);
  REQUIRE(r.witnesses.size() == 2);
  PermGroup u = gen(s4(), r.witnesses[0].generators);
  CHECK(u.order() == 2);
  CHECK(u.contains(cyc(4, {{0, 1}, {2, 3}})) + u.contains(cyc(4, {{0, 2}, {1, 3}})) +
            u.contains(cyc(4, {{0, 3}, {1, 2}})) ==
        1);
  CHECK(gen(s4(), r.witnesses[1].generators).same_group(v4()));

  CHECK(check_star_stage(s4(), a4()).checks.at(checks::commuting_conjugates).status ==
        CheckStatus::pass);
  PermGroup a5 = library::alternating(5);
  CHECK(check_star_stage(a5, a5).checks.at(checks::commuting_conjugates).status ==
        CheckStatus::pass);
}

TEST_CASE("star check agrees with the naive search")
{
  for (auto const &name : small) {
    auto const &g = corpus::get(name).group;
    auto elems = naive(g);
    auto fams = oracle::commuting_families(g.degree(), elems, oracle::all_subgroups(g.degree(), elems));
    for (auto const &a : normal_subgroups(g)) {
      auto ae = naive(a);
      bool expect_fail = std::any_of(fams.begin(), fams.end(),
                                     [&](auto const &f) { return oracle::subset(ae, f.second); });
      auto st = check_star_stage(g, a).checks.at(checks::commuting_conjugates).status;
      CHECK_MESSAGE(st == (expect_fail ? CheckStatus::fail : CheckStatus::pass), name);
    }
  }
}

TEST_CASE("wilson stage examples")
{
  auto v = check_wilson_stage(s4(), v4());
  CHECK(v.checks.at(checks::wilson_containment).status == CheckStatus::pass);
  CHECK(v.checks.at(checks::wilson_generation).status == CheckStatus::pass);

  PermGroup c4 = cyclic2k(4);
  v = check_wilson_stage(c4, gen(c4, {c4.generators()[0].pow(2)}));
  CHECK(v.checks.at(checks::wilson_containment).status == CheckStatus::pass);
  CHECK(v.checks.at(checks::wilson_generation).status == CheckStatus::pass);

  auto const &v2 = corpus::get("C2^2").group;
  auto normals = normal_subgroups(v2);
  PermGroup k = normals[1];
  v = check_wilson_stage(v2, k);
  auto const &r = v.checks.at(checks::wilson_containment);
  CHECK(r.status == CheckStatus::fail);
  REQUIRE(r.witnesses.size() == 1);
  PermGroup l = gen(v2, r.witnesses[0].generators);
  CHECK(l.order() == 2);
  CHECK(!l.same_group(k));
}

TEST_CASE("wilson stage agrees with the naive search")
{
  for (auto const &name : small) {
    auto const &g = corpus::get(name).group;
    auto elems = naive(g);
    auto subs = oracle::all_subgroups(g.degree(), elems);
    auto fams = oracle::commuting_families(g.degree(), elems, subs);
    auto normals = oracle::normal_subgroups(g.degree(), elems);
    for (auto const &k : normal_subgroups(g)) {
      auto ke = naive(k);
      bool contain_ok = std::all_of(normals.begin(), normals.end(), [&](auto const &l) {
        return oracle::subset(l, ke) || oracle::subset(ke, l);
      });
      bool gen_ok = std::none_of(fams.begin(), fams.end(),
                                 [&](auto const &f) { return !oracle::subset(f.second, ke); });
      auto v = check_wilson_stage(g, k);
      CHECK_MESSAGE(v.checks.at(checks::wilson_containment).status ==
                        (contain_ok ? CheckStatus::pass : CheckStatus::fail),
                    name);
      CHECK_MESSAGE(v.checks.at(checks::wilson_generation).status ==
                        (gen_ok ? CheckStatus::pass : CheckStatus::fail),
                    name);
    }
  }
}

TEST_CASE("strengthened stage examples")
{
  auto v = check_thmb_stage(s4(), a4(), v4(), v4());
  CHECK(v.checks.at(checks::central_indecomposable).status == CheckStatus::pass);

  auto const &v2 = corpus::get("C2^2").group;
  PermGroup c2a = normal_subgroups(v2)[1];
  v = check_thmb_stage(v2, c2a, PermGroup::trivial(v2.degree()), c2a);
  auto const &d = v.checks.at(checks::central_indecomposable);
  CHECK(d.status == CheckStatus::fail);
  REQUIRE(d.witnesses.size() == 3);
  CHECK(gen(v2, d.witnesses[0].generators).same_group(v2));

  v = check_thmb_stage(s4(), a4(), v4(), std::nullopt);
  CHECK(v.checks.at(checks::normalised_dichotomy).status == CheckStatus::not_applicable);
}

TEST_CASE("normalised dichotomy agrees with the naive search")
{
  for (auto const &name : small) {
    auto const &g = corpus::get(name).group;
    auto elems = naive(g);
    auto subs = oracle::all_subgroups(g.degree(), elems);
    for (auto const &a : normal_subgroups(g)) {
      for (auto const &p : normal_subgroups(g)) {
        auto bad = oracle::dichotomy_violations(g.degree(), elems, naive(a), naive(p), subs);
        auto st = check_thmb_stage(g, a, PermGroup::trivial(g.degree()), p)
                      .checks.at(checks::normalised_dichotomy)
                      .status;
        CHECK_MESSAGE(st == (bad.empty() ? CheckStatus::pass : CheckStatus::fail), name);
      }
    }
  }
  // The S4 case with A = P = V4 and B = 1, frozen from the naive search.
  auto elems = naive(s4());
  auto bad = oracle::dichotomy_violations(4, elems, naive(v4()), naive(v4()),
                                          oracle::all_subgroups(4, elems));
  auto st = check_thmb_stage(s4(), v4(), PermGroup::trivial(4), v4())
                .checks.at(checks::normalised_dichotomy)
                .status;
  CHECK(bad.size() == 9);
  CHECK(st == CheckStatus::fail);
}

TEST_CASE("subgroup searches above the bound are inconclusive")
{
  auto v = check_star_stage(s4(), a4(), 10);
  CHECK(v.checks.at(checks::commuting_conjugates).status == CheckStatus::inconclusive);
  v = check_wilson_stage(s4(), v4(), 10);
  CHECK(v.checks.at(checks::wilson_containment).status == CheckStatus::pass);
  CHECK(v.checks.at(checks::wilson_generation).status == CheckStatus::inconclusive);
  PermGroup chain = s4().with_mode(Mode::chain);
  v = check_star_stage(chain, a4().with_mode(Mode::chain));
  CHECK(v.checks.at(checks::commuting_conjugates).status == CheckStatus::inconclusive);
}

TEST_CASE("verify_critlem examples")
{
  CHECK(verify_critlem(s4(), {s4(), v4(), PermGroup::trivial(4)}, a4()));
  CHECK(verify_critlem(s4(), {s4(), v4(), PermGroup::trivial(4)}, v4()));
  CHECK(verify_critlem(s4(), {s4(), a4(), v4()}, s4()));
  CHECK_THROWS_AS(verify_critlem(s4(), {s4(), a4(), PermGroup::trivial(4)}, s4()),
                  PreconditionError);
}

TEST_CASE("verify_critlem on small groups")
{
  for (auto const &name : small) {
    auto const &g = corpus::get(name).group;
    for (auto const &pair : critical_pairs(g)) {
      for (auto const &k : normal_subgroups(g))
        CHECK_MESSAGE(verify_critlem(g, pair, k), name);
    }
  }
}

TEST_CASE("check_opsch examples")
{
  CHECK(check_opsch(s4(), 2).status == CheckStatus::not_applicable);
  auto v = check_opsch(corpus::get("C2xS3").group, 2);
  CHECK(v.status == CheckStatus::pass);
  CHECK(v.has_p_chief_factor);
  CHECK(v.p_chief_factors_central);
  CHECK(check_opsch(PermGroup::trivial(1), 2).status == CheckStatus::not_applicable);
  CHECK_THROWS_AS(check_opsch(s4(), 4), PreconditionError);

  // SL(2,5) has a central C2 but A5's multiplier is even.
  v = check_opsch(corpus::get("SL(2,5)").group, 2);
  CHECK(v.status == CheckStatus::not_applicable);
  CHECK(!v.multipliers_coprime);

  auto partial = SchurTable::parse("# version: 1\n# order_bound: 59\n");
  v = check_opsch(corpus::get("A5xC2").group, 3, partial);
  CHECK(v.status == CheckStatus::not_applicable);
  v = check_opsch(corpus::get("A5xC2").group, 2, partial);
  CHECK(v.status == CheckStatus::inconclusive);
}

TEST_CASE("derivation on the S3 wreath prefix")
{
  auto sp = s3_wreath_prefix();
  auto out = derive_reid_from_wilson(sp);
  REQUIRE(out.stages[0].a_mark);
  REQUIRE(out.stages[0].b0);
  REQUIRE(out.stages[1].a_mark);
  validate_prefix(out);
  auto v = check_reid_stage(*out.stages[1].map, *out.stages[1].a_mark, *out.stages[0].a_mark,
                            *out.b(0));
  CHECK(v.checks.at(checks::critical_pair).status == CheckStatus::pass);
  CHECK(v.checks.at(checks::centralizer).status == CheckStatus::pass);
  CHECK(check_star_stage(out.stages[0].group, *out.stages[0].a_mark)
            .checks.at(checks::commuting_conjugates)
            .status == CheckStatus::pass);
  // The top stage is not interior: S3 wr S3 fails Wilson's containment
  // condition through an index-4 normal subgroup, so the chosen top A is
  // minimal over the kernel without being critical.
  CHECK(out.stages[1].a_mark->order() == 648);
  CHECK(check_wilson_stage(out.stages[1].group, *out.b(1))
            .checks.at(checks::wilson_containment)
            .status == CheckStatus::fail);
}

TEST_CASE("derivation boundary cases")
{
  SystemPrefix one;
  one.stages.push_back({s4(), std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  auto out = derive_reid_from_wilson(one);
  auto pairs = critical_pairs(s4());
  CHECK(out.stages[0].a_mark->same_group(pairs.front().a));
  CHECK(out.stages[0].b0->same_group(pairs.front().b));

  // C4 -> C2: the kernel C2 is central, so level 1 has no admissible choice.
  PermGroup c4 = cyclic2k(4), c2 = cyclic2k(2);
  SystemPrefix sp;
  sp.stages.push_back({c2, std::nullopt, std::nullopt, std::nullopt, std::nullopt});
  sp.stages.push_back({c4, std::nullopt, std::nullopt, GroupHom(c4, c2, {c2.generators()[0]}),
                       std::nullopt});
  validate_prefix(sp);
  try {
    derive_reid_from_wilson(sp);
    FAIL("expected a hypothesis failure");
  } catch (HypothesisError const &e) {
    CHECK(e.level() == 1);
  }
}

TEST_CASE("certify the cyclic tower")
{
  auto sp = cyclic_tower();
  auto opts = all_checks();
  auto v = certify_system(sp, opts);
  REQUIRE(v.stages.size() == 4);
  for (std::size_t n = 0; n < 4; ++n)
    CHECK(v.stages[n].checks.at(checks::critical_pair).status == CheckStatus::pass);
  for (std::size_t n = 0; n < 3; ++n)
    CHECK(v.stages[n].checks.at(checks::centralizer).status == CheckStatus::fail);
  CHECK(v.stages[3].checks.at(checks::centralizer).status == CheckStatus::not_applicable);
  for (std::size_t n = 1; n < 4; ++n) {
    CHECK(v.stages[n].checks.at(checks::wilson_containment).status == CheckStatus::pass);
    CHECK(v.stages[n].checks.at(checks::wilson_generation).status == CheckStatus::pass);
  }
  auto const &crit = v.summary.front();
  CHECK(crit.criterion == "critical-pair criterion");
  CHECK(crit.failing_stages == std::vector<std::size_t>{0, 1, 2});
  CHECK(crit.failing_stages == crit.checked_stages);
  CHECK(v.limit_claims.front().find("fail at all checked stages") != std::string::npos);
  CHECK(overall_status(v) == CheckStatus::fail);
}

TEST_CASE("certify reports and witnesses")
{
  SimpleClass cls = SimpleClass::from_names({"C2", "C3"});
  for (auto sp : {s4_s3_prefix(), cyclic_tower(), derive_reid_from_wilson(s3_wreath_prefix())}) {
    auto opts = all_checks();
    opts.simple_class = cls;
    auto v = certify_system(sp, opts);
    CHECK(v == certify_system(sp, opts));
    auto copy = v;
    summarize(copy);
    CHECK(copy == v);
    for (auto const &st : v.stages) {
      for (auto const &[name, r] : st.checks) {
        if (r.status == CheckStatus::fail)
          CHECK_MESSAGE(witness_reproduces(sp, st, name, &cls), name);
      }
    }
  }
  CHECK_THROWS_AS(certify_system(SystemPrefix{}, {}), PreconditionError);
}

TEST_CASE("S4 over S3 stage verdicts")
{
  auto v = certify_system(s4_s3_prefix(), {});
  CHECK(v.stages[0].checks.at(checks::critical_pair).status == CheckStatus::fail);
  CHECK(v.stages[0].checks.at(checks::centralizer).status == CheckStatus::pass);
  CHECK(v.stages[1].checks.at(checks::critical_pair).status == CheckStatus::pass);
  CHECK(v.stages[1].checks.at(checks::centralizer).status == CheckStatus::not_applicable);
}
