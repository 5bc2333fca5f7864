#include "binoidal/grading.hpp"

#include "binoidal/constructions.hpp"
#include "binoidal/error.hpp"
#include "binoidal/lp.hpp"
#include "binoidal/rewrite.hpp"
#include "binoidal/spectrum.hpp"

#include <algorithm>

namespace binoidal {
namespace {

// Finite rules as integer difference rows lhs - rhs.
std::vector<std::vector<long long>> difference_rows(const RewriteSystem& rs) {
  std::vector<std::vector<long long>> rows;
  for (const auto& rule : rs.rules()) {
    if (rule.rhs.is_inf()) continue;
    std::vector<long long> row(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i)
      row[i] = static_cast<long long>(rule.lhs[i]) - static_cast<long long>(rule.rhs[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Words of one degree, ascending in the term order.
std::vector<Word> words_ascending(std::size_t rank, std::uint64_t degree) {
  std::vector<Word> out;
  for_each_word_of_degree(rank, degree, [&](const Word& w) { out.push_back(w); });
  std::reverse(out.begin(), out.end());
  return out;
}

// Calls fn for every word with the given grade.
template <typename Fn>
void for_each_word_of_grade(const Grading& g, std::uint64_t target, Fn&& fn) {
  const std::size_t r = g.size();
  Word w = Word::zero(r);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> void {
    if (i == r) {
      if (left == 0) fn(w);
      return;
    }
    for (std::uint64_t k = 0; k * g[i] <= left; ++k) {
      w[i] = static_cast<Exponent>(k);
      self(self, i + 1, left - k * g[i]);
    }
    w[i] = 0;
  };
  rec(rec, 0, target);
}

void require_positive(const RewriteSystem& rs) {
  if (!predicates(rs.source(), Spectrum::compute(rs.source()), rs).positive)
    throw PreconditionError("NotPositive", "the binoid has nontrivial units");
}

std::uint64_t max_degree_in_class(const RewriteSystem& rs, const Grading& g, const Word& nf) {
  std::uint64_t best = 0;
  for_each_word_of_grade(g, grade(g, nf), [&](const Word& w) {
    if (w.degree() > best && rs.normal_form(w) == nf) best = w.degree();
  });
  return best;
}

} // namespace

std::uint64_t grade(const Grading& g, const Word& w) {
  if (w.is_inf()) throw PreconditionError("IsInfinity", "inf has no grade");
  if (w.rank() != g.size()) throw InvalidInput("grading length does not match the word");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) total += g[i] * w[i];
  return total;
}

std::optional<Grading> find_positive_grading(const RewriteSystem& rs) {
  const std::size_t r = rs.rank();
  const auto rows = difference_rows(rs);
  // Substituting w = 1 + v turns w >= 1 into v >= 0 with D v = -D 1.
  lp::Matrix a;
  std::vector<lp::Rational> b;
  for (const auto& row : rows) {
    std::vector<lp::Rational> q;
    long long sum = 0;
    for (long long x : row) {
      q.emplace_back(static_cast<long>(x));
      sum += x;
    }
    a.push_back(std::move(q));
    b.emplace_back(static_cast<long>(-sum));
  }
  if (a.empty()) return Grading(r, 1);
  const auto v = lp::feasible_point(a, b);
  if (!v) return std::nullopt;

  std::vector<lp::Rational> w(r);
  mpz_class denominators = 1;
  for (std::size_t i = 0; i < r; ++i) {
    w[i] = (*v)[i] + 1;
    mpz_lcm(denominators.get_mpz_t(), denominators.get_mpz_t(), w[i].get_den_mpz_t());
  }
  std::vector<mpz_class> ints(r);
  mpz_class common = 0;
  for (std::size_t i = 0; i < r; ++i) {
    ints[i] = w[i].get_num() * (denominators / w[i].get_den());
    mpz_gcd(common.get_mpz_t(), common.get_mpz_t(), ints[i].get_mpz_t());
  }
  Grading out(r);
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class x = ints[i] / common;
    if (!x.fits_ulong_p()) throw InvalidInput("grading weight exceeds 64 bits");
    out[i] = x.get_ui();
  }
  return out;
}

std::optional<Grading> find_positive_grading(const Presentation& p) {
  return find_positive_grading(RewriteSystem::complete(p));
}

bool is_valid_grading(const RewriteSystem& rs, const Grading& g) {
  if (g.size() != rs.rank()) return false;
  if (std::any_of(g.begin(), g.end(), [](std::uint64_t x) { return x == 0; })) return false;
  for (const auto& rule : rs.rules())
    if (!rule.rhs.is_inf() && grade(g, rule.lhs) != grade(g, rule.rhs)) return false;
  return true;
}

const char* to_string(SeparationVerdict v) {
  switch (v) {
  case SeparationVerdict::Separated: return "Separated";
  case SeparationVerdict::NotSeparated: return "NotSeparated";
  case SeparationVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

std::vector<Witness> search_witnesses(const RewriteSystem& rs, std::size_t degree_budget, bool first_only) {
  const std::size_t r = rs.rank();
  const GenMask nonunits = Spectrum::compute(rs.source()).max_ideal();
  std::vector<std::vector<Word>> fs(degree_budget + 1), gs(degree_budget + 1);
  for (std::uint64_t d = 0; d <= degree_budget; ++d)
    for (const Word& w : words_ascending(r, d)) {
      if (rs.normal_form(w) == w) fs[d].push_back(w);
      if (d > 0 && (w.support() & nonunits)) gs[d].push_back(w);
    }
  std::vector<Witness> out;
  for (std::size_t df = 0; df <= degree_budget; ++df)
    for (std::size_t dg = 1; dg <= degree_budget; ++dg)
      for (const Word& f : fs[df])
        for (const Word& g : gs[dg])
          if (rs.normal_form(f + g) == f) {
            out.push_back({f, g});
            if (first_only) return out;
          }
  return out;
}

} // namespace

std::vector<Witness> all_unseparated(const RewriteSystem& rs, std::size_t degree_budget) {
  return search_witnesses(rs, degree_budget, false);
}

std::optional<Witness> find_unseparated(const RewriteSystem& rs, std::size_t degree_budget) {
  auto found = search_witnesses(rs, degree_budget, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

SeparationReport is_separated(const RewriteSystem& rs, std::size_t degree_budget) {
  const Presentation& p = rs.source();
  const Spectrum s = Spectrum::compute(p);
  SeparationReport rep;
  if (s.empty()) {
    // {inf} is its own separating ideal.
    rep.verdict = SeparationVerdict::Separated;
    return rep;
  }
  const Predicates pr = predicates(p, s, rs);
  rep.applicable_theorem = pr.positive && pr.integral;
  if (pr.positive) {
    rep.grading = find_positive_grading(rs);
    if (rep.grading) {
      rep.verdict = SeparationVerdict::Separated;
      return rep;
    }
  }
  rep.witness = find_unseparated(rs, degree_budget);
  if (rep.witness || rep.applicable_theorem)
    rep.verdict = SeparationVerdict::NotSeparated;
  else
    rep.verdict = SeparationVerdict::Unknown;
  return rep;
}

SeparationReport is_separated(const Presentation& p, std::size_t degree_budget) {
  return is_separated(RewriteSystem::complete(p), degree_budget);
}

SepDim sepdim(const Presentation& p, std::size_t degree_budget, std::size_t completion_budget) {
  const RewriteSystem rs = RewriteSystem::complete(p, completion_budget);
  const Spectrum s = Spectrum::compute(p);
  if (s.empty()) throw PreconditionError("ZeroBinoid", "the zero binoid has no separated dimension");
  SepDim out;
  for (const auto& w : all_unseparated(rs, degree_budget)) {
    const bool dominated =
        std::any_of(out.witnesses.begin(), out.witnesses.end(), [&](const Word& u) { return u.divides(w.f); });
    if (dominated) continue;
    std::erase_if(out.witnesses, [&](const Word& u) { return w.f.divides(u); });
    out.witnesses.push_back(w.f);
  }
  std::sort(out.witnesses.begin(), out.witnesses.end(), GrlexLess{});
  std::vector<int> height, coheight;
  const auto closed = v_set(s, out.witnesses);
  chain_lengths_pairwise(closed, height, coheight);
  out.value = height.empty() ? -1 : *std::max_element(height.begin(), height.end());
  const auto quotient = RewriteSystem::complete(rees_quotient(p, out.witnesses), completion_budget);
  out.certified = is_separated(quotient, degree_budget).verdict == SeparationVerdict::Separated;
  return out;
}

std::uint64_t order_delta(const RewriteSystem& rs, const Grading& g, const Word& w) {
  require_positive(rs);
  if (!is_valid_grading(rs, g)) throw PreconditionError("InvalidGrading", "weights must be >= 1 and respect every rule");
  const Word nf = rs.normal_form(w);
  if (nf.is_inf()) throw PreconditionError("IsInfinity", "the order of inf is infinite");
  return max_degree_in_class(rs, g, nf);
}

std::uint64_t hilbert_samuel(const RewriteSystem& rs, std::uint64_t n) {
  if (n == 0) throw InvalidInput("hilbert_samuel needs n >= 1");
  require_positive(rs);
  const auto g = find_positive_grading(rs);
  if (!g) throw PreconditionError("NoPositiveGrading", "the Hilbert-Samuel function needs a positive grading");
  // Every class of order < n has a representative of degree < n.
  std::uint64_t count = 0;
  for (const Word& f : rs.enumerate_elements(n - 1))
    if (max_degree_in_class(rs, *g, f) < n) ++count;
  return count;
}

std::uint64_t hilbert_samuel(const Presentation& p, std::uint64_t n) {
  return hilbert_samuel(RewriteSystem::complete(p), n);
}

} // namespace binoidal
