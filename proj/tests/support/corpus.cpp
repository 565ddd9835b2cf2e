#include "corpus.hpp"

#include <stdexcept>

#include "jicert/group_ops.hpp"
#include "jicert/homomorphism.hpp"
#include "jicert/library.hpp"

namespace corpus {

using namespace jicert;

PermGroup central_product(PermGroup const &a, Permutation const &za, PermGroup const &b,
                          Permutation const &zb)
{
  PermGroup ab = direct_product(a, b);
  std::size_t deg = ab.degree();
  Permutation z = za.shifted(0, deg) * zb.shifted(a.degree(), deg);
  PermGroup zg = subgroup_generated(ab, std::vector<Permutation>{z});
  return quotient(ab, zg).first;
}

namespace {

Permutation central_involution(PermGroup const &g)
{
  PermGroup z = center(g);
  for (auto const &x : z.elements()) {
    if (x.order() == 2)
      return x;
  }
  throw std::logic_error("no central involution");
}

std::vector<Entry> build()
{
  using library::by_name;
  std::vector<Entry> out;
  auto add = [&](std::string name, PermGroup g, std::uint64_t order) {
    out.push_back({std::move(name), std::move(g), order});
  };
  add("1", PermGroup::trivial(1), 1);
  for (std::string n : {"C2", "C3", "C4", "C5", "C6", "C8"})
    add(n, by_name(n), std::stoull(n.substr(1)));
  add("C2^2", by_name("D4"), 4);
  add("C2^3", direct_product(by_name("D4"), by_name("C2")), 8);
  add("C3^2", direct_product(by_name("C3"), by_name("C3")), 9);
  add("C2xC4", direct_product(by_name("C2"), by_name("C4")), 8);
  add("D8", by_name("D8"), 8);
  add("D10", by_name("D10"), 10);
  add("D12", by_name("D12"), 12);
  add("Q8", by_name("Q8"), 8);
  add("S3", by_name("S3"), 6);
  add("S4", by_name("S4"), 24);
  add("S5", by_name("S5"), 120);
  add("S6", by_name("S6"), 720);
  add("A4", by_name("A4"), 12);
  add("A5", by_name("A5"), 60);
  add("A6", by_name("A6"), 360);
  add("SL(2,3)", by_name("SL(2,3)"), 24);
  add("SL(2,5)", by_name("SL(2,5)"), 120);
  add("PSL(2,7)", by_name("PSL(2,7)"), 168);
  add("S3wrS3", wreath_product(by_name("S3"), by_name("S3")), 1296);
  add("C2wrS5", wreath_product(by_name("C2"), by_name("S5")), 3840);
  add("C2xS3", direct_product(by_name("C2"), by_name("S3")), 12);
  add("S3xS3", direct_product(by_name("S3"), by_name("S3")), 36);
  add("A5xC2", direct_product(by_name("A5"), by_name("C2")), 120);
  PermGroup q8 = by_name("Q8"), c4 = by_name("C4"), d8 = by_name("D8"), sl23 = by_name("SL(2,3)");
  add("Q8oC4", central_product(q8, central_involution(q8), c4, central_involution(c4)), 16);
  add("D8oD8", central_product(d8, central_involution(d8), d8, central_involution(d8)), 32);
  add("SL(2,3)oC4",
      central_product(sl23, central_involution(sl23), c4, central_involution(c4)), 48);
  return out;
}

} // namespace

std::vector<Entry> const &groups()
{
  static std::vector<Entry> const all = build();
  return all;
}

Entry const &get(std::string const &name)
{
  for (auto const &e : groups()) {
    if (e.name == name)
      return e;
  }
  throw std::out_of_range("no corpus group " + name);
}

} // namespace corpus
