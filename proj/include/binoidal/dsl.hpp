#pragma once

#include "binoidal/presentation.hpp"
#include "binoidal/simplicial.hpp"

#include <string_view>

namespace binoidal {

// Presentation grammar (whitespace insignificant):
//
//   presentation := "free" "(" [ident ("," ident)*] ")" ["/" "(" relation ("," relation)* ")"]
//   relation     := term "=" term
//   term         := "inf" | "0" | summand ("+" summand)*
//   summand      := [integer] ident
//   ident        := [A-Za-z_][A-Za-z0-9_]*      ("inf" reserved)

Presentation parse_presentation(std::string_view text);

/// A single term over the generators of `p`.
Word parse_word(std::string_view text, const Presentation& p);

/// `complex{1,2,3; {1,2},{2,3}}` or {"vertices": [...], "facets": [[...], ...]}.
SimplicialComplex parse_complex(std::string_view text);

} // namespace binoidal
