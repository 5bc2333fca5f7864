#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace binoidal {

using Exponent = std::uint32_t;
using GenMask = std::uint64_t;

/// Largest generator count representable by a GenMask.
inline constexpr std::size_t kMaxGenerators = 64;

/// An element of the free commutative binoid (N^r)^inf: either the absorbing
/// word `inf`, or an exponent vector of length r. Zero entries mean the
/// generator is absent.
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Word inf() {
    Word w;
    w.inf_ = true;
    return w;
  }
  static Word zero(std::size_t rank) { return Word(std::vector<Exponent>(rank, 0)); }
  static Word generator(std::size_t rank, std::size_t index, Exponent power = 1) {
    Word w = zero(rank);
    w.exps_[index] = power;
    return w;
  }

  bool is_inf() const noexcept { return inf_; }
  bool is_zero() const noexcept;
  std::size_t rank() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  // Undefined on inf; callers check is_inf() first.
  std::uint64_t degree() const noexcept;
  GenMask support() const noexcept;

  /// Componentwise a <= b; inf never divides and is never divided.
  bool divides(const Word& other) const noexcept;

  friend Word operator+(const Word& a, const Word& b);
  Word& operator+=(const Word& other);
  /// a - b for b dividing a.
  friend Word operator-(const Word& a, const Word& b);
  friend Word lcm(const Word& a, const Word& b);
  friend Word gcd(const Word& a, const Word& b);
  Word scaled(Exponent k) const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Structural order (inf first, then lexicographic exponents) for containers;
  /// not the term order.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

private:
  bool inf_ = false;
  std::vector<Exponent> exps_;
};

/// Graded lexicographic order; generator 0 is the largest variable and inf is
/// strictly below every finite word. Returns <0, 0, >0.
int grlex_compare(const Word& a, const Word& b) noexcept;

struct GrlexLess {
  bool operator()(const Word& a, const Word& b) const noexcept { return grlex_compare(a, b) < 0; }
};

inline int popcount(GenMask m) noexcept { return __builtin_popcountll(m); }

/// Calls fn(word) for every finite word of rank r with degree exactly d.
template <typename Fn>
void for_each_word_of_degree(std::size_t rank, std::uint64_t degree, Fn&& fn) {
  std::vector<Exponent> e(rank, 0);
  if (rank == 0) {
    if (degree == 0) fn(Word(e));
    return;
  }
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i + 1 == rank) {
      e[i] = static_cast<Exponent>(left);
      fn(Word(e));
      e[i] = 0;
      return;
    }
    for (std::uint64_t k = left + 1; k-- > 0;) {
      e[i] = static_cast<Exponent>(k);
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, degree);
}

/// Calls fn(word) for every finite word of rank r with degree <= bound,
/// degree by degree.
template <typename Fn>
void for_each_word_up_to(std::size_t rank, std::uint64_t bound, Fn&& fn) {
  for (std::uint64_t d = 0; d <= bound; ++d) for_each_word_of_degree(rank, d, fn);
}

} // namespace binoidal
