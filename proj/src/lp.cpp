#include "binoidal/lp.hpp"

#include "binoidal/error.hpp"

namespace binoidal::lp {

std::optional<std::vector<Rational>> feasible_point(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw InvalidInput("right-hand side length does not match the matrix");
  const std::size_t n = m ? a[0].size() : 0;
  if (m == 0) return std::vector<Rational>(n);
  for (const auto& row : a)
    if (row.size() != n) throw InvalidInput("ragged constraint matrix");

  // Tableau columns: n originals, m artificials, right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Phase one is bounded below by zero, so a ratio row always exists.
    if (leave == m) break;
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }

  // cost[rhs] holds minus the objective value.
  if (cost[n + m] != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  return x;
}

} // namespace binoidal::lp
