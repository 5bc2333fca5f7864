#include "binoidal/dsl.hpp"

#include "binoidal/error.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <map>

namespace binoidal {
namespace {

enum class Tok { Ident, Int, LParen, RParen, LBrace, RBrace, Comma, Semi, Slash, Eq, Plus, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    skip_ws();
    Token t{Tok::End, "", line_, col_};
    if (pos_ >= s_.size()) return t;
    const char c = s_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        t.text += advance();
      t.kind = Tok::Ident;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) t.text += advance();
      // Vertex names such as "1a" lex as identifiers in complex input.
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_') &&
          allow_alnum_) {
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
          t.text += advance();
        t.kind = Tok::Ident;
        return t;
      }
      t.kind = Tok::Int;
      return t;
    }
    t.text = std::string(1, advance());
    switch (c) {
    case '(': t.kind = Tok::LParen; break;
    case ')': t.kind = Tok::RParen; break;
    case '{': t.kind = Tok::LBrace; break;
    case '}': t.kind = Tok::RBrace; break;
    case ',': t.kind = Tok::Comma; break;
    case ';': t.kind = Tok::Semi; break;
    case '/': t.kind = Tok::Slash; break;
    case '=': t.kind = Tok::Eq; break;
    case '+': t.kind = Tok::Plus; break;
    default: t.kind = Tok::Bad; break;
    }
    return t;
  }

  void allow_alnum_names(bool b) { allow_alnum_ = b; }

private:
  char advance() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) advance();
  }

  std::string_view s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
  bool allow_alnum_ = false;
};

const char* describe(Tok k) {
  switch (k) {
  case Tok::Ident: return "identifier";
  case Tok::Int: return "integer";
  case Tok::LParen: return "'('";
  case Tok::RParen: return "')'";
  case Tok::LBrace: return "'{'";
  case Tok::RBrace: return "'}'";
  case Tok::Comma: return "','";
  case Tok::Semi: return "';'";
  case Tok::Slash: return "'/'";
  case Tok::Eq: return "'='";
  case Tok::Plus: return "'+'";
  case Tok::End: return "end of input";
  case Tok::Bad: return "invalid character";
  }
  return "token";
}

class Parser {
public:
  explicit Parser(std::string_view s, bool alnum_names = false) : lex_(s) {
    lex_.allow_alnum_names(alnum_names);
    cur_ = lex_.next();
  }

  [[noreturn]] void fail(const std::string& msg, const Token& at) const {
    throw ParseError("syntax error: " + msg, at.line, at.col);
  }
  [[noreturn]] void unexpected(const std::string& expected) const {
    std::string got = describe(cur_.kind);
    if (cur_.kind == Tok::Ident || cur_.kind == Tok::Int || cur_.kind == Tok::Bad)
      got += " '" + cur_.text + "'";
    fail("expected " + expected + ", found " + got, cur_);
  }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }
  Token expect(Tok k) {
    if (cur_.kind != k) unexpected(describe(k));
    return take();
  }
  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    take();
    return true;
  }

  Presentation presentation() {
    const Token kw = expect(Tok::Ident);
    if (kw.text != "free") fail("expected 'free'", kw);
    expect(Tok::LParen);
    if (peek().kind != Tok::RParen) {
      do {
        const Token id = peek();
        if (id.kind != Tok::Ident) unexpected("generator name");
        take();
        if (id.text == "inf") fail("'inf' is reserved and cannot name a generator", id);
        if (index_.count(id.text)) fail("duplicate generator '" + id.text + "'", id);
        index_.emplace(id.text, names_.size());
        names_.push_back(id.text);
      } while (accept(Tok::Comma));
    }
    expect(Tok::RParen);
    std::vector<std::pair<Word, Word>> rels;
    if (accept(Tok::Slash)) {
      expect(Tok::LParen);
      do {
        Word u = term();
        expect(Tok::Eq);
        Word v = term();
        rels.emplace_back(std::move(u), std::move(v));
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    expect(Tok::End);
    if (names_.size() > kMaxGenerators) fail("too many generators", kw);
    return make_presentation(names_, std::move(rels));
  }

  void use_generators(const std::vector<std::string>& names) {
    names_ = names;
    for (std::size_t i = 0; i < names.size(); ++i) index_.emplace(names[i], i);
  }

  Word term() {
    if (peek().kind == Tok::Ident && peek().text == "inf") {
      take();
      return Word::inf();
    }
    if (peek().kind == Tok::Int && peek().text == "0") {
      take();
      if (peek().kind == Tok::Ident) fail("coefficient must be at least 1", peek());
      return Word::zero(names_.size());
    }
    Word w = Word::zero(names_.size());
    summand(w);
    while (peek().kind == Tok::Plus) {
      const Token plus = take();
      if (peek().kind != Tok::Ident && peek().kind != Tok::Int) fail("dangling '+'", plus);
      summand(w);
    }
    return w;
  }

  void summand(Word& w) {
    std::uint64_t coeff = 1;
    if (peek().kind == Tok::Int) {
      const Token n = take();
      if (n.text.size() > 9) fail("coefficient too large", n);
      coeff = std::stoull(n.text);
      if (coeff == 0) fail("coefficient must be at least 1", n);
    }
    const Token id = peek();
    if (id.kind != Tok::Ident) unexpected("generator name");
    take();
    if (id.text == "inf") fail("'inf' cannot be used as a summand", id);
    auto it = index_.find(id.text);
    if (it == index_.end()) fail("unknown generator '" + id.text + "'", id);
    const std::uint64_t e = std::uint64_t{w[it->second]} + coeff;
    if (e > std::numeric_limits<Exponent>::max() / 4) fail("exponent too large", id);
    w[it->second] = static_cast<Exponent>(e);
  }

  SimplicialComplex complex() {
    const Token kw = expect(Tok::Ident);
    if (kw.text != "complex") fail("expected 'complex'", kw);
    expect(Tok::LBrace);
    std::vector<std::string> verts;
    if (peek().kind != Tok::Semi) {
      do verts.push_back(vertex_name());
      while (accept(Tok::Comma));
    }
    expect(Tok::Semi);
    std::vector<std::vector<std::string>> facets;
    if (peek().kind == Tok::LBrace) {
      do {
        expect(Tok::LBrace);
        std::vector<std::string> f;
        if (peek().kind != Tok::RBrace) {
          do f.push_back(vertex_name());
          while (accept(Tok::Comma));
        }
        expect(Tok::RBrace);
        facets.push_back(std::move(f));
      } while (accept(Tok::Comma));
    }
    expect(Tok::RBrace);
    expect(Tok::End);
    return from_facets(std::move(verts), facets);
  }

private:
  std::string vertex_name() {
    if (peek().kind != Tok::Ident && peek().kind != Tok::Int) unexpected("vertex name");
    return take().text;
  }

  Lexer lex_;
  Token cur_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

SimplicialComplex complex_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 1, e.byte);
  }
  auto name_of = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw InvalidInput("vertex names must be strings or integers");
  };
  if (!j.is_object() || !j.contains("vertices") || !j.contains("facets") || !j["vertices"].is_array() ||
      !j["facets"].is_array())
    throw InvalidInput("complex JSON needs \"vertices\" and \"facets\" arrays");
  std::vector<std::string> verts;
  for (const auto& v : j["vertices"]) verts.push_back(name_of(v));
  std::vector<std::vector<std::string>> facets;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw InvalidInput("each facet must be an array");
    std::vector<std::string> face;
    for (const auto& v : f) face.push_back(name_of(v));
    facets.push_back(std::move(face));
  }
  return from_facets(std::move(verts), facets);
}

} // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text, const Presentation& p) {
  Parser parser(text);
  parser.use_generators(p.generators());
  Word w = parser.term();
  parser.expect(Tok::End);
  return w;
}

SimplicialComplex parse_complex(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && text[i] == '{') return complex_from_json(text);
  return Parser(text, true).complex();
}

Presentation operator""_pres(const char* text, std::size_t len) {
  return parse_presentation(std::string_view(text, len));
}

} // namespace binoidal
