#include "binoidal/format.hpp"

#include "binoidal/error.hpp"

namespace binoidal {

AlgebraFormat parse_algebra_format(std::string_view name) {
  if (name == "generic") return AlgebraFormat::Generic;
  if (name == "macaulay2") return AlgebraFormat::Macaulay2;
  if (name == "singular") return AlgebraFormat::Singular;
  throw InvalidInput("unknown format '" + std::string(name) + "' (expected generic, macaulay2 or singular)");
}

std::string format_monomial(const Word& w, const std::string& prefix) {
  std::string out;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (!w[i]) continue;
    if (!out.empty()) out += '*';
    out += prefix + std::to_string(i + 1);
    if (w[i] > 1) out += '^' + std::to_string(w[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_algebra(std::size_t variables, const std::vector<std::string>& generators,
                           AlgebraFormat format, const std::string& prefix) {
  std::string vars;
  for (std::size_t i = 0; i < variables; ++i) {
    if (i) vars += ',';
    vars += prefix + std::to_string(i + 1);
  }
  std::string ideal;
  for (const auto& g : generators) {
    if (!ideal.empty()) ideal += ", ";
    ideal += g;
  }
  switch (format) {
  case AlgebraFormat::Generic:
    return "ring K[" + vars + "]; ideal (" + (ideal.empty() ? "0" : ideal) + ")";
  case AlgebraFormat::Macaulay2:
    return "R = QQ[" + vars + "]; I = ideal(" + (ideal.empty() ? "0_R" : ideal) + ")";
  case AlgebraFormat::Singular:
    return "ring R = 0,(" + vars + "),dp; ideal I = " + (ideal.empty() ? "0" : ideal) + ";";
  }
  return {};
}

} // namespace binoidal
