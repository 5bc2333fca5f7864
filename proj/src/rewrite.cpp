#include "binoidal/rewrite.hpp"

#include "binoidal/error.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace binoidal {
namespace {

Word reduce(const std::vector<RewriteRule>& rules, Word w) {
  bool changed = true;
  while (changed && !w.is_inf()) {
    changed = false;
    for (const auto& r : rules) {
      if (r.lhs.divides(w)) {
        w = r.rhs.is_inf() ? Word::inf() : (w - r.lhs) + r.rhs;
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Rewrites the overlap lcm(a.lhs, b.lhs) with a and with b.
std::pair<Word, Word> critical_pair(const RewriteRule& a, const RewriteRule& b) {
  const Word top = lcm(a.lhs, b.lhs);
  auto via = [&](const RewriteRule& r) { return r.rhs.is_inf() ? Word::inf() : (top - r.lhs) + r.rhs; };
  return {via(a), via(b)};
}

} // namespace

RewriteSystem RewriteSystem::complete(const Presentation& p, std::size_t budget) {
  RewriteSystem rs;
  rs.source_ = p;
  std::vector<RewriteRule>& rules = rs.rules_;
  std::deque<std::pair<Word, Word>> pending;
  for (const auto& rel : p.relations()) pending.emplace_back(rel.lhs, rel.rhs);

  std::size_t processed = 0;
  while (!pending.empty()) {
    if (++processed > budget) throw BudgetExceeded(budget);
    auto [u, v] = std::move(pending.front());
    pending.pop_front();
    u = reduce(rules, std::move(u));
    v = reduce(rules, std::move(v));
    const int c = grlex_compare(u, v);
    if (c == 0) continue;
    RewriteRule fresh = c > 0 ? RewriteRule{std::move(u), std::move(v)} : RewriteRule{std::move(v), std::move(u)};

    // Rules whose lhs the new rule rewrites go back into the queue.
    std::vector<RewriteRule> kept;
    kept.reserve(rules.size() + 1);
    for (auto& r : rules) {
      if (fresh.lhs.divides(r.lhs))
        pending.emplace_back(std::move(r.lhs), std::move(r.rhs));
      else
        kept.push_back(std::move(r));
    }
    rules = std::move(kept);
    for (const auto& r : rules) {
      if ((r.lhs.support() & fresh.lhs.support()) == 0) continue; // disjoint overlaps always join
      pending.push_back(critical_pair(fresh, r));
    }
    rules.push_back(std::move(fresh));
    for (std::size_t i = 0; i < rules.size(); ++i) {
      if (rules[i].rhs.is_inf()) continue;
      Word rhs = rules[i].rhs;
      // rhs is below lhs, so reducing it with the full set cannot use rule i.
      rules[i].rhs = reduce(rules, std::move(rhs));
    }
  }
  std::sort(rules.begin(), rules.end(),
            [](const RewriteRule& a, const RewriteRule& b) { return grlex_compare(a.lhs, b.lhs) < 0; });
  return rs;
}

void RewriteSystem::check_rank(const Word& w) const {
  if (!w.is_inf() && w.rank() != rank())
    throw InvalidInput("word has " + std::to_string(w.rank()) + " exponents, presentation has " +
                       std::to_string(rank()) + " generators");
}

Word RewriteSystem::normal_form(const Word& w) const {
  check_rank(w);
  return reduce(rules_, w);
}

bool RewriteSystem::equal(const Word& u, const Word& v) const { return normal_form(u) == normal_form(v); }

std::vector<Word> RewriteSystem::enumerate_elements(std::uint64_t degree_bound) const {
  std::set<Word, GrlexLess> seen;
  for_each_word_up_to(rank(), degree_bound, [&](const Word& w) {
    Word nf = reduce(rules_, w);
    if (!nf.is_inf()) seen.insert(std::move(nf));
  });
  return {seen.begin(), seen.end()};
}

bool RewriteSystem::monomial_only() const noexcept {
  return std::all_of(rules_.begin(), rules_.end(), [](const RewriteRule& r) { return r.rhs.is_inf(); });
}

std::string RewriteSystem::to_string() const {
  std::ostringstream os;
  for (const auto& r : rules_)
    os << format_word(r.lhs, source_.generators()) << " -> " << format_word(r.rhs, source_.generators()) << '\n';
  return os.str();
}

} // namespace binoidal
