#include "jicert/library.hpp"

#include <regex>

#include "jicert/group_ops.hpp"

namespace jicert::library {

namespace {

PermGroup make(std::size_t degree, std::vector<Permutation> gens, Mode mode = Mode::dense,
               std::uint64_t bound = kDefaultDenseBound)
{
  return PermGroup::from_generators(degree, std::move(gens), mode, bound);
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t len)
{
  std::vector<Point> c;
  for (std::size_t i = 0; i < len; ++i)
    c.push_back(static_cast<Point>(first + i));
  return Permutation::from_cycles(degree, {c});
}

void require_prime(std::size_t p)
{
  if (!is_prime(p))
    throw PreconditionError(std::to_string(p) + " is not prime");
}

std::size_t mod(std::int64_t a, std::size_t p)
{
  auto m = static_cast<std::int64_t>(p);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

std::size_t inverse_mod(std::size_t a, std::size_t p)
{
  for (std::size_t x = 1; x < p; ++x) {
    if ((a * x) % p == 1)
      return x;
  }
  throw PreconditionError("no inverse modulo p");
}

} // namespace

PermGroup cyclic(std::size_t n)
{
  if (n == 0)
    throw PreconditionError("cyclic group of order 0");
  if (n == 1)
    return PermGroup::trivial(1);
  return make(n, {cycle_on(n, 0, n)});
}

PermGroup symmetric(std::size_t n)
{
  if (n == 0)
    throw PreconditionError("symmetric group on 0 points");
  if (n < 2)
    return PermGroup::trivial(n);
  return make(n, {cycle_on(n, 0, n), cycle_on(n, 0, 2)});
}

PermGroup alternating(std::size_t n)
{
  if (n == 0)
    throw PreconditionError("alternating group on 0 points");
  if (n < 3)
    return PermGroup::trivial(n);
  // (0 1 2) together with (0 1 ... n-1) or (1 2 ... n-1), whichever is even.
  std::vector<Permutation> gens{cycle_on(n, 0, 3)};
  if (n > 3)
    gens.push_back(n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1));
  return make(n, gens);
}

PermGroup dihedral(std::size_t order)
{
  if (order < 2 || order % 2 != 0)
    throw PreconditionError("dihedral groups have even order >= 2");
  std::size_t m = order / 2;
  if (m == 1)
    return cyclic(2);
  if (m == 2)
    return make(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                    Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
  std::vector<Point> refl(m);
  for (std::size_t i = 0; i < m; ++i)
    refl[i] = static_cast<Point>(mod(-static_cast<std::int64_t>(i), m));
  return make(m, {cycle_on(m, 0, m), Permutation(refl)});
}

PermGroup quaternion8()
{
  // Element 4*s + u stands for (-1)^s * {1, i, j, k}[u].
  static constexpr int unit_sign[4][4] = {
    {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit_prod[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mult = [](int g) {
    std::vector<Point> imgs(8);
    for (int x = 0; x < 8; ++x) {
      int s = (x / 4 + g / 4 + unit_sign[x % 4][g % 4]) % 2;
      imgs[static_cast<std::size_t>(x)] = static_cast<Point>(4 * s + unit_prod[x % 4][g % 4]);
    }
    return Permutation(imgs);
  };
  return make(8, {right_mult(1), right_mult(2)});
}

PermGroup special_linear2(std::size_t p)
{
  require_prime(p);
  std::size_t deg = p * p - 1;
  auto point = [p](std::size_t x, std::size_t y) { return static_cast<Point>(x * p + y - 1); };
  // Row vectors (x, y) times a matrix [[a, b], [c, d]].
  auto matrix = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    std::vector<Point> imgs(deg);
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = 0; y < p; ++y) {
        if (x == 0 && y == 0)
          continue;
        auto xi = static_cast<std::int64_t>(x);
        auto yi = static_cast<std::int64_t>(y);
        imgs[point(x, y)] = point(mod(xi * a + yi * c, p), mod(xi * b + yi * d, p));
      }
    }
    return Permutation(imgs);
  };
  return make(deg, {matrix(1, 1, 0, 1), matrix(0, -1, 1, 0)});
}

PermGroup projective_special_linear2(std::size_t p)
{
  require_prime(p);
  std::size_t inf = p;
  std::vector<Point> shift(p + 1), invert(p + 1);
  for (std::size_t x = 0; x < p; ++x) {
    shift[x] = static_cast<Point>((x + 1) % p);
    invert[x] = static_cast<Point>(x == 0 ? inf : mod(-static_cast<std::int64_t>(inverse_mod(x, p)), p));
  }
  shift[inf] = static_cast<Point>(inf);
  invert[inf] = 0;
  return make(p + 1, {Permutation(shift), Permutation(invert)});
}

PermGroup by_name(std::string const &name, Mode mode, std::uint64_t dense_bound)
{
  static std::regex const simple(R"(^([CSADQ])(\d+)$)");
  static std::regex const linear(R"(^(P?SL)\(2,(\d+)\)$)");
  std::smatch m;
  PermGroup g;
  if (std::regex_match(name, m, simple)) {
    std::size_t n = std::stoul(m[2].str());
    switch (m[1].str()[0]) {
    case 'C': g = cyclic(n); break;
    case 'S': g = symmetric(n); break;
    case 'A': g = alternating(n); break;
    case 'D': g = dihedral(n); break;
    case 'Q':
      if (n != 8)
        throw PreconditionError("only Q8 is available");
      g = quaternion8();
      break;
    }
  } else if (std::regex_match(name, m, linear)) {
    std::size_t p = std::stoul(m[2].str());
    g = m[1].str() == "SL" ? special_linear2(p) : projective_special_linear2(p);
  } else {
    throw PreconditionError("unknown group name '" + name + "'");
  }
  if (mode == Mode::chain || dense_bound != kDefaultDenseBound)
    return PermGroup::from_generators(g.degree(), {g.generators().begin(), g.generators().end()},
                                      mode, dense_bound);
  return g;
}

} // namespace jicert::library
