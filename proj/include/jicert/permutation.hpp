#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace jicert {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Products act on the right: `(a * b)[x] == b[a[x]]`, so `a * b` applies `a`
/// first. Conjugation is `x^g = g^-1 x g` and the commutator is
/// `[a, b] = a^-1 b^-1 a b`.
class Permutation
{
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws std::invalid_argument unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation operator*(Permutation const &rhs) const;
  Permutation &operator*=(Permutation const &rhs);
  Permutation pow(std::int64_t e) const;

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;

  /// g^-1 * this * g
  Permutation conjugate_by(Permutation const &g) const;

  /// Same permutation acting on `degree` points; the extra points are fixed.
  Permutation extended(std::size_t degree) const;

  /// Shift onto points offset..offset+degree-1 of a permutation of `degree` points.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  /// Restriction to points [first, first+count); those points must be invariant.
  Permutation restricted(std::size_t first, std::size_t count) const;

  std::string to_cycle_string() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &a, Permutation const &b)
  {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

Permutation commutator(Permutation const &a, Permutation const &b);

struct PermutationHash
{
  std::size_t operator()(Permutation const &p) const noexcept;
};

} // namespace jicert
