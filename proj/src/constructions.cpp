#include "binoidal/constructions.hpp"

#include "binoidal/error.hpp"
#include "binoidal/spectrum.hpp"

#include <set>

namespace binoidal {
namespace {

std::string fresh(const std::string& base, std::set<std::string>& taken) {
  std::string n = base;
  while (taken.count(n)) n += "_";
  taken.insert(n);
  return n;
}

std::pair<std::vector<std::string>, std::vector<std::string>> disjoint_names(const std::vector<std::string>& a,
                                                                             const std::vector<std::string>& b) {
  std::set<std::string> in_a(a.begin(), a.end()), in_b(b.begin(), b.end());
  std::set<std::string> taken;
  std::vector<std::string> ra, rb;
  for (const auto& n : a) ra.push_back(in_b.count(n) ? n + "_1" : n);
  for (const auto& n : b) rb.push_back(in_a.count(n) ? n + "_2" : n);
  for (auto& n : ra) n = fresh(n, taken);
  for (auto& n : rb) n = fresh(n, taken);
  return {ra, rb};
}

std::vector<std::pair<Word, Word>> lifted_relations(const Presentation& p, std::size_t offset, std::size_t total) {
  std::vector<std::pair<Word, Word>> out;
  for (const auto& rel : p.relations()) out.emplace_back(embed(rel.lhs, offset, total), embed(rel.rhs, offset, total));
  return out;
}

} // namespace

Word embed(const Word& w, std::size_t offset, std::size_t total) {
  if (w.is_inf()) return w;
  Word out = Word::zero(total);
  for (std::size_t i = 0; i < w.rank(); ++i) out[offset + i] = w[i];
  return out;
}

Presentation smash(const Presentation& a, const Presentation& b) {
  auto [na, nb] = disjoint_names(a.generators(), b.generators());
  const std::size_t total = na.size() + nb.size();
  auto rels = lifted_relations(a, 0, total);
  auto rb = lifted_relations(b, a.rank(), total);
  rels.insert(rels.end(), rb.begin(), rb.end());
  na.insert(na.end(), nb.begin(), nb.end());
  return make_presentation(std::move(na), std::move(rels));
}

Presentation product(const std::vector<Presentation>& factors) {
  if (factors.empty()) throw InvalidInput("product of an empty list of binoids");
  std::set<std::string> taken;
  std::vector<std::string> names;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    offset.push_back(names.size());
    for (const auto& n : factors[i].generators()) names.push_back(fresh(n + "_" + std::to_string(i + 1), taken));
  }
  const std::size_t first_inf = names.size();
  for (std::size_t i = 0; i < factors.size(); ++i) names.push_back(fresh("inf_" + std::to_string(i + 1), taken));
  const std::size_t total = names.size();

  std::vector<std::pair<Word, Word>> rels;
  Word all_infs = Word::zero(total);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Presentation& f = factors[i];
    const Word fi = Word::generator(total, first_inf + i);
    for (const auto& rel : f.relations())
      rels.emplace_back(embed(rel.lhs, offset[i], total), rel.rhs.is_inf() ? fi : embed(rel.rhs, offset[i], total));
    rels.emplace_back(fi.scaled(2), fi);
    for (std::size_t g = 0; g < f.rank(); ++g) rels.emplace_back(Word::generator(total, offset[i] + g) + fi, fi);
    all_infs += fi;
  }
  rels.emplace_back(all_infs, Word::inf());
  return make_presentation(std::move(names), std::move(rels));
}

Presentation bipointed_union(const Presentation& a, const Presentation& b) {
  for (const Presentation* p : {&a, &b})
    if (!predicates(*p).positive)
      throw PreconditionError("NotPositive", to_string(*p) + " has a unit generator");
  Presentation s = smash(a, b);
  auto names = s.generators();
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& rel : s.relations()) rels.emplace_back(rel.lhs, rel.rhs);
  const std::size_t total = s.rank();
  for (std::size_t x = 0; x < a.rank(); ++x)
    for (std::size_t y = 0; y < b.rank(); ++y)
      rels.emplace_back(Word::generator(total, x) + Word::generator(total, a.rank() + y), Word::inf());
  return make_presentation(std::move(names), std::move(rels));
}

Presentation rees_quotient(const Presentation& p, const std::vector<Word>& ideal) {
  auto names = p.generators();
  std::vector<std::pair<Word, Word>> rels;
  for (const auto& rel : p.relations()) rels.emplace_back(rel.lhs, rel.rhs);
  for (const auto& w : ideal) {
    if (!w.is_inf() && w.rank() != p.rank()) throw InvalidInput("ideal generator references an unknown generator");
    rels.emplace_back(w, Word::inf());
  }
  return make_presentation(std::move(names), std::move(rels));
}

} // namespace binoidal
