#pragma once

#include "binoidal/presentation.hpp"

#include <vector>

namespace binoidal {

/// Coproduct M1 ^ M2: disjoint generators, union of relations. Colliding
/// names are suffixed _1 (first factor) and _2 (second factor).
Presentation smash(const Presentation& a, const Presentation& b);

/// Direct product M1 x ... x Mn. Generator x of factor i becomes x_i, and
/// inf_i stands for the element that is inf in factor i and 0 elsewhere.
/// Relations: lifted factor relations (u = inf lifts to u_i = inf_i),
/// 2 inf_i = inf_i, x_i + inf_i = inf_i, and inf_1 + ... + inf_n = inf.
/// Throws InvalidInput on an empty list.
Presentation product(const std::vector<Presentation>& factors);

/// Bipointed union of positive binoids: smash plus x + y = inf for every
/// generator x of a and y of b. Throws PreconditionError("NotPositive").
Presentation bipointed_union(const Presentation& a, const Presentation& b);

/// M / <ideal>: adds w = inf for every ideal generator.
Presentation rees_quotient(const Presentation& p, const std::vector<Word>& ideal);

/// Copies w (rank of its own presentation) into a rank `total` word starting
/// at generator `offset`.
Word embed(const Word& w, std::size_t offset, std::size_t total);

} // namespace binoidal
