#pragma once

#include "binoidal/presentation.hpp"
#include "binoidal/rewrite.hpp"
#include "binoidal/word.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace binoidal {

/// One positive integer weight per generator.
using Grading = std::vector<std::uint64_t>;

inline constexpr std::size_t kDefaultWitnessDegree = 6;

/// Weight of a finite word under the grading.
std::uint64_t grade(const Grading& g, const Word& w);

/// A grading with all weights >= 1 that is constant on congruence classes of
/// finite elements, scaled to coprime integers; nullopt if none exists.
/// Constraints come from the finite rules of the completed system.
std::optional<Grading> find_positive_grading(const RewriteSystem& rs);
std::optional<Grading> find_positive_grading(const Presentation& p);

/// True iff g has one weight >= 1 per generator and respects every finite
/// rule of rs.
bool is_valid_grading(const RewriteSystem& rs, const Grading& g);

enum class SeparationVerdict { Separated, NotSeparated, Unknown };
const char* to_string(SeparationVerdict v);

struct Witness {
  Word f;
  Word g;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SeparationReport {
  SeparationVerdict verdict = SeparationVerdict::Unknown;
  /// f ~ f + g with g a nonunit and f not inf.
  std::optional<Witness> witness;
  std::optional<Grading> grading;
  /// Positive and integral: the graded criterion decides the verdict.
  bool applicable_theorem = false;
};

/// First pair (f, g) with f a finite normal form, g a nonunit word and
/// f ~ f + g, in the order (deg f, deg g, f, g) with words ascending in the
/// term order inside a degree; both degrees are at most `degree_budget`.
std::optional<Witness> find_unseparated(const RewriteSystem& rs, std::size_t degree_budget = kDefaultWitnessDegree);
/// Every witness within the budget, in the same order.
std::vector<Witness> all_unseparated(const RewriteSystem& rs, std::size_t degree_budget = kDefaultWitnessDegree);

SeparationReport is_separated(const RewriteSystem& rs, std::size_t degree_budget = kDefaultWitnessDegree);
SeparationReport is_separated(const Presentation& p, std::size_t degree_budget = kDefaultWitnessDegree);

struct SepDim {
  int value = -1;
  bool certified = false;
  /// Divisibility-minimal first components of the witnesses found.
  std::vector<Word> witnesses;
};

/// Dimension of the closed set V(W) of the witness ideal W; certified when
/// M / <W> is reported Separated. Throws PreconditionError("ZeroBinoid").
SepDim sepdim(const Presentation& p, std::size_t degree_budget = kDefaultWitnessDegree,
              std::size_t completion_budget = kDefaultCompletionBudget);

/// Largest degree of a word congruent to w. Throws PreconditionError with
/// code NotPositive, InvalidGrading or IsInfinity.
std::uint64_t order_delta(const RewriteSystem& rs, const Grading& g, const Word& w);

/// Number of classes f with order_delta(f) < n, i.e. #(M / nM+) - 1. Throws
/// PreconditionError("NotPositive") or ("NoPositiveGrading").
std::uint64_t hilbert_samuel(const RewriteSystem& rs, std::uint64_t n);
std::uint64_t hilbert_samuel(const Presentation& p, std::uint64_t n);

} // namespace binoidal
