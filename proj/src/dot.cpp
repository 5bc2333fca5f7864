#include "binoidal/dot.hpp"

#include <sstream>

namespace binoidal {
namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

} // namespace

std::string spectrum_dot(const Spectrum& s) {
  std::ostringstream os;
  os << "digraph spec {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    os << "  p" << i << " [label=" << quoted(s.format_prime(s.primes()[i])) << "];\n";
  for (const auto& [i, j] : s.hasse_edges()) os << "  p" << i << " -> p" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string boolean_element_label(const FiniteBooleanBinoid& b, const Spectrum& s, std::size_t element) {
  std::string label = "{";
  bool first = true;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (b.elements[element][k]) {
      label += (first ? "" : ",") + s.format_prime(s.primes()[k]);
      first = false;
    }
  return label + "}";
}

std::string boolean_dot(const FiniteBooleanBinoid& b, const Spectrum& s) {
  std::ostringstream os;
  os << "digraph bool {\n  rankdir=BT;\n  node [shape=box];\n";
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) os << "  e" << i << " [label=" << quoted(boolean_element_label(b, s, i)) << "];\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !subset(b.elements[i], b.elements[j])) continue;
      bool covers = true;
      for (std::size_t k = 0; k < n && covers; ++k)
        if (k != i && k != j && subset(b.elements[i], b.elements[k]) && subset(b.elements[k], b.elements[j]))
          covers = false;
      if (covers) os << "  e" << i << " -> e" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace binoidal
