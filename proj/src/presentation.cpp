#include "binoidal/presentation.hpp"

#include "binoidal/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_set>

namespace binoidal {

RelationClass classify_relation(const Relation& rel) {
  const GenMask ls = rel.lhs.support();
  if (rel.is_monomial())
    return {RelationKind::Monomial, popcount(ls) == 1 ? Mixedness::Unmixed : Mixedness::Mixed};
  const GenMask rs = rel.rhs.support();
  const bool unmixed = ls == rs && popcount(ls) == 1;
  return {RelationKind::Binomial, unmixed ? Mixedness::Unmixed : Mixedness::Mixed};
}

long Presentation::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<long>(it - names_.begin());
}

bool is_identifier(const std::string& s) {
  if (s.empty() || s == "inf") return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Presentation make_presentation(std::vector<std::string> names,
                               std::vector<std::pair<Word, Word>> relations) {
  if (names.size() > kMaxGenerators)
    throw InvalidInput("at most " + std::to_string(kMaxGenerators) + " generators are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidInput("empty generator name");
    if (!is_identifier(n)) throw InvalidInput("invalid generator name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidInput("duplicate generator name '" + n + "'");
  }
  Presentation p;
  p.names_ = std::move(names);
  const std::size_t r = p.names_.size();
  for (auto& [u, v] : relations) {
    for (const Word* w : {&u, &v})
      if (!w->is_inf() && w->rank() != r)
        throw InvalidInput("word references generators outside the presentation");
    if (u.is_inf() && v.is_inf()) continue;
    if (u == v) continue;
    if (u.is_inf()) std::swap(u, v);
    p.relations_.push_back({std::move(u), std::move(v)});
  }
  return p;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.is_inf()) return "inf";
  if (w.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (w[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (w[i] != 1) os << w[i];
    os << names[i];
  }
  return os.str();
}

std::string format_relation(const Relation& rel, const std::vector<std::string>& names) {
  return format_word(rel.lhs, names) + "=" + format_word(rel.rhs, names);
}

std::string to_string(const Presentation& p) {
  std::ostringstream os;
  os << "free(";
  for (std::size_t i = 0; i < p.rank(); ++i) os << (i ? "," : "") << p.name(i);
  os << ')';
  if (!p.relations().empty()) {
    os << "/(";
    for (std::size_t i = 0; i < p.relations().size(); ++i)
      os << (i ? ", " : "") << format_relation(p.relations()[i], p.generators());
    os << ')';
  }
  return os.str();
}

} // namespace binoidal
