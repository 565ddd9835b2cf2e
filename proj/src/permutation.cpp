#include "jicert/permutation.hpp"

#include <numeric>
#include <stdexcept>
#include <string_view>

namespace jicert {

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<Point>> cycles)
{
  std::vector<std::vector<Point>> cs;
  for (auto const &c : cycles)
    cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point x = c[i];
      if (x >= degree || used[x])
        throw std::invalid_argument("cycles are not disjoint or exceed degree");
      used[x] = true;
      images[x] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i] = rhs.images_[images_[i]];
  return r;
}

Permutation &Permutation::operator*=(Permutation const &rhs)
{
  *this = *this * rhs;
  return *this;
}

Permutation Permutation::pow(std::int64_t e) const
{
  Permutation base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1u : static_cast<std::uint64_t>(e);
  Permutation acc(degree());
  while (n) {
    if (n & 1u)
      acc *= base;
    base *= base;
    n >>= 1u;
  }
  return acc;
}

std::uint64_t Permutation::order() const
{
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::conjugate_by(Permutation const &g) const
{
  // x^(g^-1 p g) : g^-1 then p then g, i.e. maps g[x] -> g[p[x]]
  if (g.degree() != degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    r.images_[g.images_[x]] = g.images_[images_[x]];
  return r;
}

Permutation Permutation::extended(std::size_t degree) const
{
  if (degree < images_.size())
    throw std::invalid_argument("cannot shrink a permutation by extension");
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const
{
  if (offset + images_.size() > degree)
    throw std::invalid_argument("shifted permutation exceeds target degree");
  Permutation r(degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return r;
}

Permutation Permutation::restricted(std::size_t first, std::size_t count) const
{
  std::vector<Point> imgs(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point y = images_[first + i];
    if (y < first || y >= first + count)
      throw std::invalid_argument("restriction to a non-invariant point set");
    imgs[i] = static_cast<Point>(y - first);
  }
  return Permutation(std::move(imgs));
}

std::string Permutation::to_cycle_string() const
{
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first)
        out += ' ';
      out += std::to_string(x);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept
{
  auto imgs = p.images();
  std::string_view bytes(reinterpret_cast<char const *>(imgs.data()), imgs.size_bytes());
  return std::hash<std::string_view>{}(bytes);
}

} // namespace jicert
