#pragma once

#include "binoidal/spectrum.hpp"

#include <string>

namespace binoidal {

/// Hasse diagram of the spectrum, smaller primes at the bottom.
std::string spectrum_dot(const Spectrum& s);

/// Hasse diagram of the booleanization ordered by inclusion of the D-sets.
std::string boolean_dot(const FiniteBooleanBinoid& b, const Spectrum& s);

/// Label of a booleanization element: the primes it contains.
std::string boolean_element_label(const FiniteBooleanBinoid& b, const Spectrum& s, std::size_t element);

} // namespace binoidal
