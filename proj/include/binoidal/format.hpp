#pragma once

#include "binoidal/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace binoidal {

enum class AlgebraFormat { Generic, Macaulay2, Singular };

/// Throws InvalidInput for anything but generic, macaulay2, singular.
AlgebraFormat parse_algebra_format(std::string_view name);

/// X1^2*X3; "1" for the zero word.
std::string format_monomial(const Word& w, const std::string& prefix = "X");

/// Ring header on variables prefix1..prefixN plus the ideal generated by
/// `generators` ("0" when empty), on one line.
std::string format_algebra(std::size_t variables, const std::vector<std::string>& generators,
                           AlgebraFormat format, const std::string& prefix = "X");

} // namespace binoidal
