#pragma once

// Recursive-descent checker for the DOT language subset: graph/digraph,
// node, edge and attribute statements, a_list brackets, subgraphs.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace dotcheck {

struct Token {
  enum Kind { Id, Punct, End } kind;
  std::string text;
};

inline bool tokenize(std::string_view s, std::vector<Token>& out, std::string& error) {
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n') ++i;
    } else if (c == '"') {
      std::string text;
      ++i;
      while (i < s.size() && s[i] != '"') {
        if (s[i] == '\\' && i + 1 < s.size()) text += s[i++];
        text += s[i++];
      }
      if (i == s.size()) {
        error = "unterminated string";
        return false;
      }
      ++i;
      out.push_back({Token::Id, text});
    } else if (c == '-' && i + 1 < s.size() && (s[i + 1] == '>' || s[i + 1] == '-')) {
      out.push_back({Token::Punct, std::string(s.substr(i, 2))});
      i += 2;
    } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      const std::size_t start = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '.')) ++i;
      if (i == start) ++i;
      out.push_back({Token::Id, std::string(s.substr(start, i - start))});
    } else if (std::string_view("{}[]=;,:").find(c) != std::string_view::npos) {
      out.push_back({Token::Punct, std::string(1, c)});
      ++i;
    } else {
      error = std::string("unexpected character '") + c + "'";
      return false;
    }
  }
  out.push_back({Token::End, ""});
  return true;
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : t_(std::move(toks)) {}

  bool graph(std::string& error) {
    if (is_id("strict")) ++p_;
    if (is_id("digraph"))
      edge_op_ = "->";
    else if (is_id("graph"))
      edge_op_ = "--";
    else
      return fail(error, "expected graph or digraph");
    ++p_;
    if (t_[p_].kind == Token::Id) ++p_;
    if (!stmt_block(error)) return false;
    if (t_[p_].kind != Token::End) return fail(error, "trailing tokens after the graph body");
    return true;
  }

private:
  bool is_id(const char* s) const { return t_[p_].kind == Token::Id && t_[p_].text == s; }
  bool is_punct(const char* s) const { return t_[p_].kind == Token::Punct && t_[p_].text == s; }
  bool fail(std::string& error, const std::string& msg) {
    error = msg + " at token " + std::to_string(p_) + " '" + t_[p_].text + "'";
    return false;
  }

  bool stmt_block(std::string& error) {
    if (!is_punct("{")) return fail(error, "expected '{'");
    ++p_;
    while (!is_punct("}")) {
      if (t_[p_].kind == Token::End) return fail(error, "unbalanced '{'");
      if (!stmt(error)) return false;
      if (is_punct(";")) ++p_;
    }
    ++p_;
    return true;
  }

  bool attr_list(std::string& error) {
    while (is_punct("[")) {
      ++p_;
      while (!is_punct("]")) {
        if (t_[p_].kind != Token::Id) return fail(error, "expected attribute name");
        ++p_;
        if (!is_punct("=")) return fail(error, "expected '='");
        ++p_;
        if (t_[p_].kind != Token::Id) return fail(error, "expected attribute value");
        ++p_;
        if (is_punct(",") || is_punct(";")) ++p_;
      }
      ++p_;
    }
    return true;
  }

  bool node_id(std::string& error) {
    if (t_[p_].kind != Token::Id) return fail(error, "expected node id");
    ++p_;
    if (is_punct(":")) {
      ++p_;
      if (t_[p_].kind != Token::Id) return fail(error, "expected port");
      ++p_;
    }
    return true;
  }

  bool operand(std::string& error) {
    if (is_id("subgraph") || is_punct("{")) {
      if (is_id("subgraph")) {
        ++p_;
        if (t_[p_].kind == Token::Id) ++p_;
      }
      return stmt_block(error);
    }
    return node_id(error);
  }

  bool stmt(std::string& error) {
    if (is_id("graph") || is_id("node") || is_id("edge")) {
      ++p_;
      if (!is_punct("[")) return fail(error, "expected attribute list");
      return attr_list(error);
    }
    if (t_[p_].kind == Token::Id && t_[p_ + 1].kind == Token::Punct && t_[p_ + 1].text == "=") {
      p_ += 2;
      if (t_[p_].kind != Token::Id) return fail(error, "expected value");
      ++p_;
      return true;
    }
    if (!operand(error)) return false;
    while (t_[p_].kind == Token::Punct && (t_[p_].text == "->" || t_[p_].text == "--")) {
      if (t_[p_].text != edge_op_) return fail(error, "edge operator does not match the graph kind");
      ++p_;
      if (!operand(error)) return false;
    }
    return attr_list(error);
  }

  std::vector<Token> t_;
  std::size_t p_ = 0;
  std::string edge_op_;
};

/// Empty string when `text` is a syntactically valid DOT graph.
inline std::string check(std::string_view text) {
  std::vector<Token> toks;
  std::string error;
  if (!tokenize(text, toks, error)) return error;
  Parser parser(std::move(toks));
  if (!parser.graph(error)) return error;
  return {};
}

} // namespace dotcheck
