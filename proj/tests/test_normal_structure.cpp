#include "doctest.h"

#include <algorithm>

#include "jicert/group_ops.hpp"
#include "jicert/homomorphism.hpp"
#include "jicert/library.hpp"
#include "jicert/normal_structure.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace jicert;

namespace {

oracle::Elems naive(PermGroup const &g)
{
  return oracle::closure(g.degree(), {g.generators().begin(), g.generators().end()});
}

PermGroup gen(PermGroup const &g, std::vector<Permutation> elems)
{
  return subgroup_generated(g, elems);
}

std::vector<std::size_t> orders(std::vector<PermGroup> const &gs)
{
  std::vector<std::size_t> out;
  for (auto const &g : gs)
    out.push_back(g.order());
  return out;
}

std::map<std::string, std::size_t> by_name(FactorMultiset const &m)
{
  std::map<std::string, std::size_t> out;
  for (auto const &[t, k] : m)
    out[t.name] += k;
  return out;
}

PermGroup const &s4() { return corpus::get("S4").group; }
PermGroup v4() { return gen(s4(), {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                   Permutation::from_cycles(4, {{0, 2}, {1, 3}})}); }
PermGroup a4() { return library::alternating(4); }

// Small enough for the all-subgroups oracle to be quick.
std::vector<std::string> const small = {"1",    "C2",   "C4",    "C6",      "C2^2",    "C2^3",
                                        "C3^2", "C2xC4", "D8",   "D10",     "D12",     "Q8",
                                        "S3",   "S4",   "A4",    "A5",      "SL(2,3)", "C2xS3",
                                        "S3xS3", "Q8oC4", "D8oD8", "SL(2,3)oC4"};

} // namespace

TEST_CASE("normal subgroup examples")
{
  CHECK(orders(normal_subgroups(s4())) == std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(orders(normal_subgroups(library::alternating(5))) == std::vector<std::size_t>{1, 60});
  CHECK(orders(normal_subgroups(library::cyclic(6))) == std::vector<std::size_t>{1, 2, 3, 6});
  CHECK(orders(minimal_normal_subgroups(s4())) == std::vector<std::size_t>{4});
  CHECK(orders(maximal_normal_subgroups(s4())) == std::vector<std::size_t>{12});
  auto const &k4 = corpus::get("C2^2").group;
  CHECK(orders(minimal_normal_subgroups(k4)) == std::vector<std::size_t>{2, 2, 2});
  CHECK(orders(maximal_normal_subgroups(k4)) == std::vector<std::size_t>{2, 2, 2});
  CHECK(orders(minimal_normal_subgroups(library::alternating(5))) == std::vector<std::size_t>{60});
  CHECK(orders(maximal_normal_subgroups(library::alternating(5))) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(minimal_normal_subgroups(PermGroup::trivial(3)), PreconditionError);
  CHECK_THROWS_AS(normal_subgroups(s4().with_mode(Mode::chain)), NeedsDenseMode);
}

TEST_CASE("normal lattice agrees with the oracle")
{
  for (auto const &name : small) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    auto expect = oracle::normal_subgroups(g.degree(), naive(g));
    auto got = normal_subgroups(g);
    REQUIRE(got.size() == expect.size());
    for (std::size_t i = 0; i < got.size(); ++i)
      CHECK(got[i].elements() == expect[i]);
  }
}

TEST_CASE("criticality examples")
{
  CHECK(is_critical_pair(s4(), v4(), PermGroup::trivial(4)).critical);
  PermGroup c6 = library::cyclic(6);
  Permutation r = c6.generators()[0];
  auto res = is_critical_pair(c6, c6, gen(c6, {r.pow(2)}));
  CHECK_FALSE(res.critical);
  REQUIRE(res.witness);
  CHECK(res.witness->order() == 2);
  CHECK_THROWS_AS(is_critical_pair(s4(), a4(), a4()), PreconditionError);
  CHECK_THROWS_AS(is_critical_pair(s4(), gen(s4(), {Permutation::from_cycles(4, {{0, 1}})}),
                                   PermGroup::trivial(4)),
                  PreconditionError);

  auto pairs = critical_pairs(s4());
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].a.order() == 4);
  CHECK(pairs[0].b.order() == 1);
  CHECK(pairs[1].a.order() == 12);
  CHECK(pairs[1].b.order() == 4);
  CHECK(pairs[2].a.order() == 24);
  CHECK(pairs[2].b.order() == 12);
  auto kp = critical_pairs(corpus::get("C2^2").group);
  REQUIRE(kp.size() == 3);
  for (auto const &p : kp) {
    CHECK(p.a.order() == 2);
    CHECK(p.b.order() == 1);
  }
  CHECK(critical_pairs(PermGroup::trivial(2)).empty());
}

TEST_CASE("critical pairs agree with the oracle and are chief factors")
{
  for (auto const &name : small) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    auto expect = oracle::critical_pairs(g.degree(), naive(g));
    auto got = critical_pairs(g);
    REQUIRE(got.size() == expect.size());
    std::vector<std::pair<oracle::Elems, oracle::Elems>> got_sets;
    for (auto const &p : got) {
      got_sets.emplace_back(p.a.elements(), p.b.elements());
      CHECK(is_critical_pair(g, p.a, p.b).critical);
      CHECK(is_chief_factor(g, p.a, p.b));
    }
    std::sort(got_sets.begin(), got_sets.end());
    std::sort(expect.begin(), expect.end());
    CHECK(got_sets == expect);
  }
}

TEST_CASE("criticality passes to quotients")
{
  for (auto name : {"S4", "D8", "SL(2,3)", "S3xS3", "D8oD8"}) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    for (auto const &p : critical_pairs(g)) {
      for (auto const &n : normal_subgroups(g)) {
        if (!n.is_subgroup_of(p.b))
          continue;
        auto [q, proj] = quotient(g, n);
        CHECK(is_critical_pair(q, hom_image(proj, p.a), hom_image(proj, p.b)).critical);
      }
    }
  }
}

TEST_CASE("critical refinement examples")
{
  auto const &k4 = corpus::get("C2^2").group;
  auto mins = minimal_normal_subgroups(k4);
  auto r = find_critical_refinement(k4, k4, mins[0]);
  CHECK(r.a.order() == 2);
  CHECK_FALSE(r.a.same_group(mins[0]));
  CHECK(r.b.is_trivial());

  auto r2 = find_critical_refinement(s4(), a4(), v4());
  CHECK(r2.a.same_group(a4()));
  CHECK(r2.b.same_group(v4()));
  auto r3 = find_critical_refinement(s4(), v4(), PermGroup::trivial(4));
  CHECK(r3.a.same_group(v4()));
  CHECK_THROWS_AS(find_critical_refinement(s4(), a4(), PermGroup::trivial(4)), PreconditionError);
}

TEST_CASE("fingerprints agree with naive coset orders")
{
  auto const &g = corpus::get("SL(2,3)").group;
  auto ge = naive(g);
  for (auto const &x : normal_subgroups(g)) {
    for (auto const &y : normal_subgroups(g)) {
      if (!y.is_subgroup_of(x))
        continue;
      CHECK(section_fingerprint(g, x, y).element_orders == oracle::section_orders(x.elements(), y.elements()));
    }
  }
}

TEST_CASE("simple type identification")
{
  CHECK(identify_simple_type(library::alternating(5)).name == "A5");
  CHECK(identify_simple_type(library::cyclic(7)).name == "C7");
  CHECK(identify_simple_type(library::projective_special_linear2(7)).name == "PSL(2,7)");
  CHECK(identify_simple_type(library::alternating(6)).name == "A6");
  CHECK(identify_simple_type(library::projective_special_linear2(11)).name == "PSL(2,11)");
  CHECK_THROWS_AS(identify_simple_type(s4()), PreconditionError);
  CHECK(nonabelian_simple_catalogue().size() == 56);
  CHECK(simple_type_by_name("A5") == identify_simple_type(library::alternating(5)));
  CHECK_THROWS_AS(simple_type_by_name("C6"), PreconditionError);
}

TEST_CASE("order 20160 is split by elements of order 15")
{
  PermGroup a8 = library::alternating(8);
  CHECK(a8.order() == 20160);
  CHECK(identify_simple_type(a8).name == "A8");
}

TEST_CASE("characteristically simple decomposition")
{
  auto d = decompose_char_simple(v4());
  CHECK(d.first.name == "C2");
  CHECK(d.second == 2);
  auto a = decompose_char_simple(library::alternating(5));
  CHECK(a.first.name == "A5");
  CHECK(a.second == 1);
  PermGroup a5sq = direct_product(library::alternating(5), library::alternating(5));
  auto aa = decompose_char_simple(a5sq);
  CHECK(aa.first.name == "A5");
  CHECK(aa.second == 2);
  CHECK_THROWS_AS(decompose_char_simple(library::cyclic(4)), PreconditionError);
  CHECK_THROWS_AS(decompose_char_simple(s4()), PreconditionError);
}

TEST_CASE("composition factors")
{
  using M = std::map<std::string, std::size_t>;
  CHECK(by_name(composition_factors(s4())) == M{{"C2", 3}, {"C3", 1}});
  CHECK(by_name(composition_factors(library::alternating(5))) == M{{"A5", 1}});
  CHECK(by_name(composition_factors(corpus::get("S3wrS3").group)) == M{{"C2", 4}, {"C3", 4}});
  CHECK(composition_factors(PermGroup::trivial(1)).empty());
  for (auto const &name : small) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    CHECK(by_name(composition_factors(g)) == oracle::composition_factors(g.degree(), naive(g)));
  }
}

TEST_CASE("a top-down chief series gives the same factors")
{
  for (auto name : {"S4", "SL(2,3)", "S3xS3", "D8oD8", "A5xC2", "S3wrS3", "C2wrS5"}) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    auto normals = normal_subgroups(g);
    FactorMultiset top_down;
    PermGroup cur = g;
    while (!cur.is_trivial()) {
      // Largest normal subgroup of G strictly inside the current term, taking the last one.
      PermGroup next = PermGroup::trivial(g.degree());
      for (auto const &n : normals) {
        if (n.order() < cur.order() && n.is_subgroup_of(cur) && n.order() >= next.order())
          next = n;
      }
      auto d = describe_chief_factor(g, cur, next);
      top_down[d.simple_type] += d.multiplicity;
      cur = next;
    }
    auto bottom_up = composition_factors(g);
    CHECK(by_name(top_down) == by_name(bottom_up));
  }
}

TEST_CASE("central decomposition examples")
{
  auto c6 = central_decomposition(library::cyclic(6));
  REQUIRE(c6);
  CHECK(orders(*c6) == std::vector<std::size_t>{2, 3});
  CHECK_FALSE(central_decomposition(corpus::get("Q8").group));
  CHECK_FALSE(central_decomposition(s4()));
}

TEST_CASE("central decomposition agrees with the subgroup oracle")
{
  for (auto const &name : small) {
    CAPTURE(name);
    auto const &g = corpus::get(name).group;
    auto ge = naive(g);
    auto subs = oracle::all_subgroups(g.degree(), ge);
    auto dec = central_decomposition(g);
    CHECK(dec.has_value() == oracle::centrally_decomposable(g.degree(), ge, subs));
    if (dec) {
      REQUIRE(dec->size() == 2);
      auto const &h = (*dec)[0];
      auto const &k = (*dec)[1];
      CHECK(h.order() < g.order());
      CHECK(k.order() < g.order());
      CHECK(join(g, h, k).order() == g.order());
      CHECK(commutator_subgroup(g, h, k).is_trivial());
    }
  }
}

TEST_CASE("central decomposition witnesses")
{
  auto const &g = corpus::get("S3xS3").group;
  PermGroup k = gen(g, {Permutation::from_cycles(6, {{0, 1, 2}})});
  auto [h, m] = centdec_witness(g, k, g);
  CHECK(is_normal(g, h));
  CHECK(is_normal(g, m));
  CHECK(m.order() == 18);
  CHECK_FALSE(h.is_subgroup_of(m));
  CHECK_FALSE(k.is_subgroup_of(h));
  bool maximal = false;
  for (auto const &x : maximal_normal_subgroups(g))
    maximal = maximal || x.same_group(m);
  CHECK(maximal);

  auto const &k4 = corpus::get("C2^2").group;
  CHECK_THROWS_AS(centdec_witness(k4, minimal_normal_subgroups(k4)[0], k4), PreconditionError);

  auto const &c2s3 = corpus::get("C2xS3").group;
  PermGroup c3 = gen(c2s3, {Permutation::from_cycles(5, {{2, 3, 4}})});
  PermGroup l = gen(c2s3, {Permutation::from_cycles(5, {{0, 1}}), Permutation::from_cycles(5, {{2, 3, 4}})});
  auto [h2, m2] = centdec_witness(c2s3, c3, l);
  CHECK(is_normal(c2s3, h2));
  CHECK(is_normal(l, m2));
  CHECK_FALSE(h2.is_subgroup_of(m2));
  CHECK_FALSE(c3.is_subgroup_of(h2));
  CHECK_THROWS_AS(centdec_witness(c2s3, c3, PermGroup::trivial(5)), PreconditionError);
}
