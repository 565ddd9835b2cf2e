#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace jicert::detail {

/// Fixed-size bitset over the element indices of a dense group.
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n)
  : n_(n), words_((n + 63) / 64, 0)
  {}

  std::size_t universe() const noexcept { return n_; }

  bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const
  {
    std::size_t c = 0;
    for (auto w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(ElementSet const &o) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k])
        return false;
    }
    return true;
  }

  ElementSet operator&(ElementSet const &o) const
  {
    ElementSet r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }

  /// Calls f(i) for every member in increasing order.
  template<typename F>
  void for_each(F &&f) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<std::uint32_t>(k * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const
  {
    std::vector<std::uint32_t> out;
    for_each([&](std::uint32_t i) { out.push_back(i); });
    return out;
  }

  /// Lexicographic order of the sorted member lists, for sets of equal size.
  bool lex_less_same_size(ElementSet const &o) const
  {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t diff = words_[k] ^ o.words_[k];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (words_[k] & low) != 0;
      }
    }
    return false;
  }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

  std::size_t hash() const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (auto w : words_)
      h = (h ^ std::hash<std::uint64_t>{}(w)) * 1099511628211ull;
    return h;
  }

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

} // namespace jicert::detail
