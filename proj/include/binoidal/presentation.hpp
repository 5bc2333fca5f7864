#pragma once

#include "binoidal/word.hpp"

#include <string>
#include <utility>
#include <vector>

namespace binoidal {

/// `lhs = rhs`. Normalized relations never have both sides inf, store a
/// single inf side as rhs, and never have lhs == rhs.
struct Relation {
  Word lhs;
  Word rhs;

  bool is_monomial() const noexcept { return rhs.is_inf(); }
  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class RelationKind { Monomial, Binomial };
enum class Mixedness { Mixed, Unmixed };

struct RelationClass {
  RelationKind kind;
  Mixedness mixedness;
  friend bool operator==(const RelationClass&, const RelationClass&) = default;
};

RelationClass classify_relation(const Relation& rel);

/// free(x_1, ..., x_r) / (relations). Immutable once built; every word has
/// rank r.
class Presentation {
public:
  Presentation() = default;

  std::size_t rank() const noexcept { return names_.size(); }
  const std::vector<std::string>& generators() const noexcept { return names_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Index of a generator name, or -1.
  long index_of(const std::string& name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

private:
  friend Presentation make_presentation(std::vector<std::string>, std::vector<std::pair<Word, Word>>);
  std::vector<std::string> names_;
  std::vector<Relation> relations_;
};

/// Validates names and words, then normalizes: drops inf = inf and verbatim
/// u = u, moves a lone inf to the right-hand side.
/// Throws InvalidInput on duplicate/empty/reserved names or rank mismatch.
Presentation make_presentation(std::vector<std::string> names,
                               std::vector<std::pair<Word, Word>> relations);

bool is_identifier(const std::string& s);

std::string format_word(const Word& w, const std::vector<std::string>& names);
std::string format_relation(const Relation& rel, const std::vector<std::string>& names);
/// Canonical DSL text; parse_presentation(to_string(p)) == p.
std::string to_string(const Presentation& p);

/// Convenience for tests and examples: `free(x,y)/(2x=x+y)` style
/// construction from text. Defined in dsl.cpp.
Presentation operator""_pres(const char* text, std::size_t len);

} // namespace binoidal
