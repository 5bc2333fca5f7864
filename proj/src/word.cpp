#include "binoidal/word.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace binoidal {

bool Word::is_zero() const noexcept {
  return !inf_ && std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Word::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

GenMask Word::support() const noexcept {
  GenMask m = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) m |= GenMask{1} << i;
  return m;
}

bool Word::divides(const Word& other) const noexcept {
  if (inf_ || other.inf_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Word operator+(const Word& a, const Word& b) {
  Word r = a;
  r += b;
  return r;
}

Word& Word::operator+=(const Word& other) {
  if (inf_ || other.inf_) {
    *this = Word::inf();
    return *this;
  }
  assert(exps_.size() == other.exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  return *this;
}

Word operator-(const Word& a, const Word& b) {
  assert(b.divides(a));
  Word r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Word lcm(const Word& a, const Word& b) {
  assert(!a.inf_ && !b.inf_);
  Word r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

Word gcd(const Word& a, const Word& b) {
  assert(!a.inf_ && !b.inf_);
  Word r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return r;
}

Word Word::scaled(Exponent k) const {
  if (inf_) return *this;
  Word r = *this;
  for (auto& e : r.exps_) e *= k;
  return r;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.exps_ <=> b.exps_;
}

int grlex_compare(const Word& a, const Word& b) noexcept {
  if (a.is_inf() || b.is_inf()) {
    if (a.is_inf() && b.is_inf()) return 0;
    return a.is_inf() ? -1 : 1;
  }
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

} // namespace binoidal
