#pragma once

#include "binoidal/presentation.hpp"
#include "binoidal/word.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace binoidal {

inline constexpr std::size_t kDefaultCompletionBudget = 100000;

/// lhs -> rhs with lhs strictly above rhs in grlex; rhs may be inf.
struct RewriteRule {
  Word lhs;
  Word rhs;
  friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Reduced, confluent rewriting system for the congruence presented by a
/// Presentation. Two words are congruent iff their normal forms agree.
///
/// Completion is the Buchberger/Knuth-Bendix loop restricted to pure
/// difference binomials X^u - X^v and monomials X^u: an overlap of two rules
/// is rewritten both ways at the componentwise maximum of the left-hand
/// sides, and every unjoinable pair becomes a new rule. Termination follows
/// from Dickson's lemma; the budget caps the number of critical pairs
/// processed and exhausting it throws BudgetExceeded.
class RewriteSystem {
public:
  static RewriteSystem complete(const Presentation& p,
                                std::size_t budget = kDefaultCompletionBudget);

  const Presentation& source() const noexcept { return source_; }
  std::size_t rank() const noexcept { return source_.rank(); }
  /// Sorted by lhs, ascending in the term order.
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  Word normal_form(const Word& w) const;
  bool equal(const Word& u, const Word& v) const;
  bool is_inf(const Word& w) const { return normal_form(w).is_inf(); }

  /// Distinct finite normal forms of all words of degree <= bound, ascending
  /// in the term order.
  std::vector<Word> enumerate_elements(std::uint64_t degree_bound) const;

  /// True iff every rule has rhs inf (the semifree situation).
  bool monomial_only() const noexcept;
  /// One "LHS -> RHS" line per rule.
  std::string to_string() const;

private:
  void check_rank(const Word& w) const;

  Presentation source_;
  std::vector<RewriteRule> rules_;
};

} // namespace binoidal
