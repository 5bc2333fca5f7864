#include "binoidal/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace binoidal::kernels {

std::vector<AdmissibilityRow> admissibility_rows(const Presentation& p) {
  std::vector<AdmissibilityRow> rows;
  rows.reserve(p.relations().size());
  for (const auto& rel : p.relations())
    rows.push_back({rel.lhs.support(), rel.rhs.is_inf() ? GenMask{0} : rel.rhs.support(), rel.rhs.is_inf()});
  return rows;
}

namespace {
std::atomic<int> thread_override{0};
}

void set_default_threads(int n) { thread_override = n > 0 ? n : 0; }

int default_threads() {
  if (const int n = thread_override.load(); n > 0) return n;
  if (const char* env = std::getenv("BINOIDAL_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  return omp_get_max_threads();
}

std::vector<GenMask> scan_admissible_serial(std::span<const AdmissibilityRow> rows, std::size_t rank) {
  std::vector<GenMask> out;
  const GenMask end = GenMask{1} << rank;
  for (GenMask a = 0; a < end; ++a)
    if (admissible(rows, a)) out.push_back(a);
  return out;
}

std::vector<GenMask> scan_admissible_parallel(std::span<const AdmissibilityRow> rows, std::size_t rank,
                                              int threads) {
  const int nt = threads > 0 ? threads : default_threads();
  const std::int64_t end = std::int64_t{1} << rank;
  // Fixed-size blocks keep the merge order independent of scheduling.
  constexpr std::int64_t kBlock = 1 << 12;
  const std::int64_t nblocks = (end + kBlock - 1) / kBlock;
  std::vector<std::vector<GenMask>> parts(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    auto& part = parts[static_cast<std::size_t>(b)];
    const std::int64_t hi = std::min(end, (b + 1) * kBlock);
    for (std::int64_t a = b * kBlock; a < hi; ++a)
      if (admissible(rows, static_cast<GenMask>(a))) part.push_back(static_cast<GenMask>(a));
  }
  std::vector<GenMask> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1 % q;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

struct RelationTerms {
  std::vector<std::pair<std::size_t, Exponent>> lhs, rhs;
  bool rhs_inf;
};

std::vector<RelationTerms> relation_terms(const Presentation& p) {
  std::vector<RelationTerms> out;
  for (const auto& rel : p.relations()) {
    RelationTerms t{{}, {}, rel.rhs.is_inf()};
    for (std::size_t i = 0; i < p.rank(); ++i) {
      if (rel.lhs[i]) t.lhs.emplace_back(i, rel.lhs[i]);
      if (!t.rhs_inf && rel.rhs[i]) t.rhs.emplace_back(i, rel.rhs[i]);
    }
    out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t eval(const std::vector<std::pair<std::size_t, Exponent>>& terms, const std::vector<std::uint64_t>& a,
                   std::uint64_t q) {
  std::uint64_t v = 1 % q;
  for (const auto& [i, e] : terms) v = v * pow_mod(a[i], e, q) % q;
  return v;
}

bool satisfies(const std::vector<RelationTerms>& rels, const std::vector<std::uint64_t>& a, std::uint64_t q) {
  for (const auto& t : rels) {
    const std::uint64_t l = eval(t.lhs, a, q);
    const std::uint64_t r = t.rhs_inf ? 0 : eval(t.rhs, a, q);
    if (l != r) return false;
  }
  return true;
}

void decode(std::uint64_t index, std::uint64_t q, std::vector<std::uint64_t>& a) {
  for (auto& x : a) {
    x = index % q;
    index /= q;
  }
}

std::uint64_t map_count(std::size_t rank, std::uint64_t q) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) n *= q;
  return n;
}

} // namespace

std::uint64_t count_maps_serial(const Presentation& p, std::uint64_t q) {
  const auto rels = relation_terms(p);
  const std::uint64_t n = map_count(p.rank(), q);
  std::vector<std::uint64_t> a(p.rank());
  std::uint64_t count = 0;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    decode(idx, q, a);
    if (satisfies(rels, a, q)) ++count;
  }
  return count;
}

std::uint64_t count_maps_parallel(const Presentation& p, std::uint64_t q, int threads) {
  const int nt = threads > 0 ? threads : default_threads();
  const auto rels = relation_terms(p);
  const auto n = static_cast<std::int64_t>(map_count(p.rank(), q));
  std::uint64_t count = 0;
#pragma omp parallel num_threads(nt) reduction(+ : count)
  {
    std::vector<std::uint64_t> a(p.rank());
#pragma omp for schedule(static)
    for (std::int64_t idx = 0; idx < n; ++idx) {
      decode(static_cast<std::uint64_t>(idx), q, a);
      if (satisfies(rels, a, q)) ++count;
    }
  }
  return count;
}

} // namespace binoidal::kernels
