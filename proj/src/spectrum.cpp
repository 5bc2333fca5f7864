#include "binoidal/spectrum.hpp"

#include "binoidal/error.hpp"
#include "binoidal/kernels.hpp"
#include "binoidal/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace binoidal {

bool subset_order_less(GenMask a, GenMask b) noexcept {
  const int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on sorted index lists: the smallest differing element
  // decides, and the set holding it comes first.
  const GenMask diff = a ^ b;
  if (diff == 0) return false;
  const GenMask low = diff & (~diff + 1);
  return (a & low) != 0;
}

Spectrum Spectrum::compute(const Presentation& p, const SpectrumOptions& opts) {
  if (p.rank() > kMaxScanGenerators && !opts.force)
    throw PreconditionError("TooManyGenerators", "spectrum scan over 2^" + std::to_string(p.rank()) +
                                                     " subsets refused; pass --force to override");
  if (p.rank() >= 63) throw PreconditionError("TooManyGenerators", "at most 62 generators can be scanned");
  Spectrum s;
  s.names_ = p.generators();
  const auto rows = kernels::admissibility_rows(p);
  s.primes_ = opts.threads == 1 ? kernels::scan_admissible_serial(rows, p.rank())
                                : kernels::scan_admissible_parallel(rows, p.rank(), opts.threads);
  std::sort(s.primes_.begin(), s.primes_.end(), subset_order_less);
  for (GenMask a : s.primes_) s.max_ideal_ |= a;
  s.compute_chains();
  return s;
}

bool Spectrum::contains(GenMask a) const noexcept {
  return std::binary_search(primes_.begin(), primes_.end(), a, subset_order_less);
}

std::size_t Spectrum::index_of(GenMask a) const {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), a, subset_order_less);
  if (it == primes_.end() || *it != a)
    throw PreconditionError("NotPrime", format_prime(a) + " is not a prime of this binoid");
  return static_cast<std::size_t>(it - primes_.begin());
}

void chain_lengths_pairwise(const std::vector<GenMask>& primes, std::vector<int>& height,
                            std::vector<int>& coheight) {
  // primes sorted by size, so every strict subset precedes its supersets.
  const std::size_t n = primes.size();
  height.assign(n, 0);
  coheight.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (primes[i] != primes[j] && (primes[i] & primes[j]) == primes[i])
        height[j] = std::max(height[j], height[i] + 1);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (primes[i] != primes[j] && (primes[i] & primes[j]) == primes[i])
        coheight[i] = std::max(coheight[i], coheight[j] + 1);
}

void Spectrum::compute_chains() {
  const std::size_t r = rank();
  if (r > 20 || primes_.size() < 64) {
    chain_lengths_pairwise(primes_, height_, coheight_);
    return;
  }
  // Subset dynamic program over all 2^r masks:
  // below[m] = longest chain ending at a prime inside m (-1 if none),
  // above[m] = longest chain starting at a prime containing m.
  const std::size_t full = std::size_t{1} << r;
  std::vector<std::int8_t> is_prime(full, 0);
  for (GenMask a : primes_) is_prime[a] = 1;
  std::vector<std::int8_t> below(full, -1), above(full, -1);
  for (std::size_t m = 0; m < full; ++m) {
    int best = -1;
    for (std::size_t i = 0; i < r; ++i)
      if (m >> i & 1) best = std::max<int>(best, below[m & ~(std::size_t{1} << i)]);
    below[m] = static_cast<std::int8_t>(is_prime[m] ? best + 1 : best);
  }
  for (std::size_t m = full; m-- > 0;) {
    int best = -1;
    for (std::size_t i = 0; i < r; ++i)
      if (!(m >> i & 1)) best = std::max<int>(best, above[m | (std::size_t{1} << i)]);
    above[m] = static_cast<std::int8_t>(is_prime[m] ? best + 1 : best);
  }
  height_.resize(primes_.size());
  coheight_.resize(primes_.size());
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    const GenMask a = primes_[k];
    int h = -1;
    for (std::size_t i = 0; i < r; ++i)
      if (a >> i & 1) h = std::max<int>(h, below[a & ~(GenMask{1} << i)]);
    height_[k] = h + 1;
    int c = -1;
    for (std::size_t i = 0; i < r; ++i)
      if (!(a >> i & 1)) c = std::max<int>(c, above[a | (GenMask{1} << i)]);
    coheight_[k] = c + 1;
  }
}

int Spectrum::dim() const noexcept {
  if (primes_.empty()) return -1;
  return *std::max_element(height_.begin(), height_.end());
}

int Spectrum::height(GenMask prime) const { return height_[index_of(prime)]; }
int Spectrum::prime_dim(GenMask prime) const { return coheight_[index_of(prime)]; }

std::vector<std::pair<std::size_t, std::size_t>> Spectrum::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = primes_.size();
  auto below = [&](std::size_t i, std::size_t j) {
    return primes_[i] != primes_[j] && (primes_[i] & primes_[j]) == primes_[i];
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!below(i, j)) continue;
      bool covered = true;
      for (std::size_t k = i + 1; k < j && covered; ++k)
        if (below(i, k) && below(k, j)) covered = false;
      if (covered) edges.emplace_back(i, j);
    }
  return edges;
}

std::string Spectrum::format_prime(GenMask prime) const {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < rank(); ++i)
    if (prime >> i & 1) {
      if (!first) s += ',';
      s += names_[i];
      first = false;
    }
  return s + "}";
}

int dim(const Presentation& p) { return Spectrum::compute(p).dim(); }

std::vector<std::uint64_t> f_vector(const Spectrum& s) {
  if (s.empty()) throw PreconditionError("ZeroBinoid", "the zero binoid has no F-vector");
  std::vector<std::uint64_t> f(static_cast<std::size_t>(s.dim()) + 1, 0);
  for (GenMask a : s.primes()) ++f[static_cast<std::size_t>(s.prime_dim(a))];
  return f;
}

namespace {

std::vector<GenMask> minimal_of(const std::vector<GenMask>& sets) {
  std::vector<GenMask> out;
  for (GenMask a : sets) {
    bool minimal = true;
    for (GenMask b : sets)
      if (b != a && (b & a) == b) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

} // namespace

std::vector<GenMask> minimal_primes(const Spectrum& s) { return minimal_of(s.primes()); }

bool prime_contains(GenMask prime, const Word& w) noexcept {
  return w.is_inf() || (w.support() & prime) != 0;
}

std::vector<GenMask> v_set(const Spectrum& s, const std::vector<Word>& words) {
  std::vector<GenMask> out;
  for (GenMask a : s.primes())
    if (std::all_of(words.begin(), words.end(), [&](const Word& w) { return prime_contains(a, w); }))
      out.push_back(a);
  return out;
}

std::vector<GenMask> minimal_primes_over(const Spectrum& s, const std::vector<Word>& words) {
  return minimal_of(v_set(s, words));
}

std::vector<std::vector<GenMask>> irreducible_components(const Spectrum& s) {
  std::vector<std::vector<GenMask>> out;
  for (GenMask p : minimal_primes(s)) out.push_back(closure(s, {p}));
  return out;
}

std::vector<GenMask> d_set(const Spectrum& s, const Word& w) {
  std::vector<GenMask> out;
  for (GenMask a : s.primes())
    if (!prime_contains(a, w)) out.push_back(a);
  return out;
}

std::vector<GenMask> closure(const Spectrum& s, const std::vector<GenMask>& primes) {
  std::vector<GenMask> out;
  for (GenMask a : s.primes())
    if (std::any_of(primes.begin(), primes.end(), [&](GenMask p) { return (p & a) == p; })) out.push_back(a);
  return out;
}

bool is_nilpotent(const Spectrum& s, const Word& w) {
  if (w.is_inf()) return true;
  const auto mins = minimal_primes(s);
  return std::all_of(mins.begin(), mins.end(), [&](GenMask p) { return prime_contains(p, w); });
}

bool radical_membership(const Spectrum& s, const Word& w, const std::vector<Word>& ideal) {
  if (w.is_inf()) return true;
  const auto mins = minimal_primes_over(s, ideal);
  return std::all_of(mins.begin(), mins.end(), [&](GenMask p) { return prime_contains(p, w); });
}

std::vector<GenMask> minimal_transversals(const std::vector<GenMask>& family) {
  std::vector<GenMask> found;
  auto rec = [&](auto&& self, GenMask chosen) -> void {
    for (GenMask t : found)
      if ((t & chosen) == t) return; // already dominated
    auto unhit = std::find_if(family.begin(), family.end(), [&](GenMask f) { return (f & chosen) == 0; });
    if (unhit == family.end()) {
      found.push_back(chosen);
      return;
    }
    for (GenMask rest = *unhit; rest; rest &= rest - 1) self(self, chosen | (rest & (~rest + 1)));
  };
  rec(rec, 0);
  auto out = minimal_of(found);
  std::sort(out.begin(), out.end(), subset_order_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Predicates predicates(const Presentation& p, const Spectrum& s, const RewriteSystem& rs) {
  Predicates pr;
  const std::size_t r = p.rank();
  const GenMask all = r == 64 ? ~GenMask{0} : (GenMask{1} << r) - 1;
  pr.zero = s.empty();
  pr.units = pr.zero ? all : (all & ~s.max_ideal());
  pr.positive = pr.units == 0;
  if (!pr.zero) {
    GenMask a0 = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (rs.is_inf(Word::generator(r, i))) a0 |= GenMask{1} << i;
    pr.integral = s.contains(a0);
  }
  pr.reduced = true;
  for (GenMask t : minimal_transversals(minimal_primes(s))) {
    Word w = Word::zero(r);
    for (std::size_t i = 0; i < r; ++i)
      if (t >> i & 1) w[i] = 1;
    if (!rs.is_inf(w)) {
      pr.reduced = false;
      break;
    }
  }
  pr.binoid_group = pr.integral && s.dim() == 0;
  pr.boolean = true;
  for (std::size_t i = 0; i < r && pr.boolean; ++i)
    pr.boolean = rs.equal(Word::generator(r, i, 2), Word::generator(r, i));
  return pr;
}

Predicates predicates(const Presentation& p) {
  return predicates(p, Spectrum::compute(p), RewriteSystem::complete(p));
}

FiniteBooleanBinoid booleanize(const Spectrum& s) {
  if (s.empty()) throw PreconditionError("ZeroBinoid", "the zero binoid has no booleanization");
  const std::size_t n = s.size(), r = s.rank();
  using Set = std::vector<bool>;
  std::vector<Set> gens(r, Set(n));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < n; ++k) gens[i][k] = !(s.primes()[k] >> i & 1);

  auto meet = [](const Set& a, const Set& b) {
    Set c(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) c[k] = a[k] && b[k];
    return c;
  };
  std::set<Set> closed{Set(n, true), Set(n, false)};
  std::vector<Set> frontier{Set(n, true)};
  while (!frontier.empty()) {
    std::vector<Set> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        Set m = meet(e, g);
        if (closed.insert(m).second) next.push_back(std::move(m));
      }
    frontier = std::move(next);
  }
  FiniteBooleanBinoid b;
  b.elements.assign(closed.begin(), closed.end());
  auto count = [](const Set& x) { return std::count(x.begin(), x.end(), true); };
  std::sort(b.elements.begin(), b.elements.end(), [&](const Set& x, const Set& y) {
    const auto cx = count(x), cy = count(y);
    if (cx != cy) return cx > cy;
    return x > y;
  });
  std::map<Set, std::uint32_t> index;
  for (std::size_t i = 0; i < b.elements.size(); ++i) index.emplace(b.elements[i], static_cast<std::uint32_t>(i));
  b.identity = index.at(Set(n, true));
  b.absorbing = index.at(Set(n, false));
  const std::size_t m = b.elements.size();
  b.table.assign(m, std::vector<std::uint32_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) b.table[i][j] = b.table[j][i] = index.at(meet(b.elements[i], b.elements[j]));
  for (const auto& g : gens) b.generator_image.push_back(index.at(g));
  return b;
}

std::vector<std::vector<std::uint32_t>> boolean_spectrum(const FiniteBooleanBinoid& b) {
  // Every filter of a finite idempotent binoid is the up-set of the sum of
  // its elements, so candidates are indexed by that sum.
  const auto m = static_cast<std::uint32_t>(b.size());
  std::vector<std::vector<std::uint32_t>> primes;
  for (std::uint32_t top = 0; top < m; ++top) {
    if (top == b.absorbing) continue;
    std::vector<bool> in_filter(m);
    for (std::uint32_t a = 0; a < m; ++a) in_filter[a] = b.table[a][top] == top;
    bool ok = in_filter[b.identity] && !in_filter[b.absorbing];
    for (std::uint32_t x = 0; x < m && ok; ++x)
      for (std::uint32_t y = 0; y < m && ok; ++y)
        ok = in_filter[b.table[x][y]] == (in_filter[x] && in_filter[y]);
    if (!ok) continue;
    std::vector<std::uint32_t> prime;
    for (std::uint32_t a = 0; a < m; ++a)
      if (!in_filter[a]) prime.push_back(a);
    primes.push_back(std::move(prime));
  }
  return primes;
}

GenMask pullback_prime(const FiniteBooleanBinoid& b, const std::vector<std::uint32_t>& prime) {
  GenMask a = 0;
  for (std::size_t i = 0; i < b.generator_image.size(); ++i)
    if (std::binary_search(prime.begin(), prime.end(), b.generator_image[i])) a |= GenMask{1} << i;
  return a;
}

} // namespace binoidal
