#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace binoidal::lp {

using Rational = mpq_class;
using Matrix = std::vector<std::vector<Rational>>;

/// A point x >= 0 with A x = b, or nullopt if none exists. Exact phase-one
/// simplex with Bland's rule, so it always terminates. The returned point is
/// a basic solution.
std::optional<std::vector<Rational>> feasible_point(const Matrix& a, const std::vector<Rational>& b);

} // namespace binoidal::lp
