#include "binoidal/algebra.hpp"

#include "binoidal/error.hpp"
#include "binoidal/kernels.hpp"
#include "binoidal/rewrite.hpp"
#include "binoidal/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace binoidal {

std::string to_string(const AbelianGroupData& g) {
  std::string out;
  if (g.rank) out = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
  for (const auto& d : g.invariant_factors) out += (out.empty() ? "" : " + ") + std::string("Z/") + d.get_str();
  return out.empty() ? "0" : out;
}

std::vector<std::string> algebra_ideal_generators(const Presentation& p) {
  std::vector<std::string> gens;
  for (const auto& rel : p.relations()) {
    if (rel.rhs.is_inf())
      gens.push_back(format_monomial(rel.lhs));
    else
      gens.push_back(format_monomial(rel.lhs) + " - " + format_monomial(rel.rhs));
  }
  return gens;
}

std::string export_algebra(const Presentation& p, AlgebraFormat format) {
  return format_algebra(p.rank(), algebra_ideal_generators(p), format);
}

AbelianGroupData smith_normal_form(const std::vector<std::vector<mpz_class>>& rows, std::size_t columns) {
  auto a = rows;
  for (const auto& row : a)
    if (row.size() != columns) throw InvalidInput("matrix row length does not match the column count");
  const std::size_t m = a.size(), n = columns;
  std::vector<mpz_class> diag;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Pivot: smallest nonzero magnitude in the remaining block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const mpz_class q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const mpz_class q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot is left in row or column t.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) {
            bi = t;
            bj = j;
          }
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      // Keep the divisibility chain: fold in a row the pivot does not divide.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(abs(a[t][t]));
  }

  AbelianGroupData out;
  out.rank = n - diag.size();
  for (const auto& d : diag)
    if (d > 1) out.invariant_factors.push_back(d);
  std::sort(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

AbelianGroupData smith_normal_form(const std::vector<std::vector<long long>>& rows, std::size_t columns) {
  std::vector<std::vector<mpz_class>> big;
  for (const auto& row : rows) {
    std::vector<mpz_class> r;
    for (long long x : row) r.emplace_back(static_cast<long>(x));
    big.push_back(std::move(r));
  }
  return smith_normal_form(big, columns);
}

AbelianGroupData diff_group_at(const Presentation& p, GenMask prime) {
  const auto rows = kernels::admissibility_rows(p);
  if (!kernels::admissible(rows, prime)) throw PreconditionError("NotPrime", "the generator set is not a prime");
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < p.rank(); ++i)
    if (!(prime >> i & 1)) kept.push_back(i);
  std::vector<std::vector<long long>> matrix;
  for (const auto& rel : p.relations()) {
    if (rel.rhs.is_inf() || (rel.lhs.support() & prime) || (rel.rhs.support() & prime)) continue;
    std::vector<long long> row;
    for (std::size_t i : kept) row.push_back(static_cast<long long>(rel.lhs[i]) - static_cast<long long>(rel.rhs[i]));
    matrix.push_back(std::move(row));
  }
  return smith_normal_form(matrix, kept.size());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t d = 2;
  while (d <= n / d && n % d) ++d;
  if (n % d) return true; // n itself is prime
  while (n % d == 0) n /= d;
  return n == 1;
}

PointCount count_points(const Presentation& p, std::uint64_t q) {
  if (!is_prime_power(q)) throw PreconditionError("NotPrimePower", std::to_string(q) + " is not a prime power");
  PointCount out;
  out.q = q;
  const mpz_class units(static_cast<unsigned long>(q - 1));
  const Spectrum s = Spectrum::compute(p);
  for (GenMask prime : s.primes()) {
    PrimePointCount c;
    c.prime = prime;
    c.group = diff_group_at(p, prime);
    mpz_pow_ui(c.count.get_mpz_t(), units.get_mpz_t(), c.group.rank);
    for (const auto& d : c.group.invariant_factors) c.count *= gcd(d, units);
    out.total += c.count;
    out.per_prime.push_back(std::move(c));
  }
  return out;
}

std::uint64_t brute_force_count(const Presentation& p, std::uint64_t q, int threads) {
  if (!is_prime(q)) throw PreconditionError("NotPrime", "the brute-force oracle needs a prime modulus");
  std::uint64_t maps = 1;
  for (std::size_t i = 0; i < p.rank(); ++i) {
    maps *= q;
    if (maps > kMaxBruteForceMaps)
      throw PreconditionError("BoundExceeded", "q^r exceeds " + std::to_string(kMaxBruteForceMaps));
  }
  return threads == 1 ? kernels::count_maps_serial(p, q) : kernels::count_maps_parallel(p, q, threads);
}

const char* to_string(Connectedness c) {
  switch (c) {
  case Connectedness::Connected: return "Connected";
  case Connectedness::Disconnected: return "Disconnected";
  case Connectedness::OutOfScope: return "OutOfScope";
  }
  return "OutOfScope";
}

const char* to_string(HypersurfaceCase c) {
  switch (c) {
  case HypersurfaceCase::UnitRelation: return "UnitRelation";
  case HypersurfaceCase::SharedFactor: return "SharedFactor";
  case HypersurfaceCase::DisjointTops: return "DisjointTops";
  case HypersurfaceCase::Monomial: return "Monomial";
  }
  return "Monomial";
}

ConnectednessVerdict hypersurface_connectedness(const Presentation& p) {
  if (p.relations().size() != 1)
    throw InvalidInput("hypersurface connectedness needs exactly one relation on free generators");
  const Relation& rel = p.relations().front();
  ConnectednessVerdict out;
  if (rel.rhs.is_inf()) return out;

  const Word h = gcd(rel.lhs, rel.rhs);
  Word f = rel.lhs - h, g = rel.rhs - h;
  if (f.is_zero()) std::swap(f, g);
  if (!g.is_zero()) {
    out.relation_case = HypersurfaceCase::DisjointTops;
    out.verdict = Connectedness::Connected;
    return out;
  }
  if (h.is_zero()) {
    out.relation_case = HypersurfaceCase::UnitRelation;
    std::uint64_t content = 0;
    for (std::size_t i = 0; i < f.rank(); ++i) content = std::gcd(content, std::uint64_t{f[i]});
    out.verdict = content == 1 ? Connectedness::Connected : Connectedness::Disconnected;
    return out;
  }
  out.relation_case = HypersurfaceCase::SharedFactor;
  if ((h.support() & ~f.support()) != 0) {
    out.verdict = Connectedness::Connected;
    return out;
  }
  std::uint64_t k = 1;
  for (std::size_t i = 0; i < f.rank(); ++i)
    if (f[i]) k = std::max<std::uint64_t>(k, (h[i] + f[i] - 1) / f[i]);
  out.verdict = Connectedness::Disconnected;
  out.idempotent_witness = f.scaled(static_cast<Exponent>(k));
  return out;
}

std::string OneGenerated::label() const {
  switch (kind) {
  case OneGeneratedKind::Free: return "N^inf";
  case OneGeneratedKind::CyclicGroup: return "(Z/" + std::to_string(s) + "Z)^inf";
  case OneGeneratedKind::Loop: return "N^inf/(" + std::to_string(r) + "=" + std::to_string(s) + ")";
  case OneGeneratedKind::Truncated: return "N^inf/(" + std::to_string(s) + "=inf)";
  }
  return {};
}

OneGenerated classify_one_generated(const Presentation& p) {
  if (p.rank() != 1) throw InvalidInput("classify-one-gen needs exactly one generator");
  const RewriteSystem rs = RewriteSystem::complete(p);
  OneGenerated out;
  if (rs.rules().empty()) return out;
  // Every rule has lhs a multiple of x, so the walk closes by the largest lhs.
  std::map<Word, std::uint64_t> seen;
  for (std::uint64_t k = 0;; ++k) {
    const Word nf = rs.normal_form(Word::generator(1, 0, static_cast<Exponent>(k)));
    if (nf.is_inf()) {
      out.kind = OneGeneratedKind::Truncated;
      out.s = k;
      return out;
    }
    auto [it, fresh] = seen.emplace(nf, k);
    if (!fresh) {
      out.r = it->second;
      out.s = k;
      out.kind = out.r == 0 ? OneGeneratedKind::CyclicGroup : OneGeneratedKind::Loop;
      return out;
    }
  }
}

TorsionReport torsion_free_cancellative_quotient(const Presentation& p) {
  const RewriteSystem rs = RewriteSystem::complete(p);
  const Spectrum s = Spectrum::compute(p);
  if (!predicates(p, s, rs).integral) throw PreconditionError("NotIntegral", "the binoid is not integral");
  GenMask a0 = 0;
  for (std::size_t i = 0; i < p.rank(); ++i)
    if (rs.is_inf(Word::generator(p.rank(), i))) a0 |= GenMask{1} << i;
  TorsionReport out;
  out.group = diff_group_at(p, a0);
  out.torsion_free = out.group.invariant_factors.empty();
  return out;
}

} // namespace binoidal
