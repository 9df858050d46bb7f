#pragma once

// Tokenizer shared by the signal and ODE parsers (internal header).

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "xformlab/errors.hpp"
#include "xformlab/gaussian_rational.hpp"

namespace xformlab::detail {

enum class TokenKind { Number, Ident, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  int line = 1;
  int column = 1;
};

inline std::vector<Token> tokenize(std::string_view src, int first_line = 1) {
  std::vector<Token> out;
  int line = first_line;
  int col = 1;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      tok.kind = TokenKind::Number;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      }
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokenKind::Ident;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
    } else if (std::string_view{"+-*/^()='"}.find(c) != std::string_view::npos) {
      tok.kind = TokenKind::Symbol;
      ++i;
    } else {
      throw SyntaxError(std::string{"unexpected character '"} + c + "'", line, col);
    }
    tok.text = std::string{src.substr(start, i - start)};
    col += static_cast<int>(i - start);
    out.push_back(std::move(tok));
  }
  out.push_back(Token{TokenKind::End, "", line, col});
  return out;
}

/// Exact value of an unsigned integer or decimal literal.
inline Rational number_value(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational{text, 10};
  const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  const std::size_t frac = text.size() - dot - 1;
  Rational q{mpz_class{digits.empty() ? "0" : digits, 10}, mpz_class{"1" + std::string(frac, '0'), 10}};
  q.canonicalize();
  return q;
}

/// Cursor over a token vector with position-aware errors.
class TokenCursor {
 public:
  explicit TokenCursor(std::vector<Token> tokens) : tokens_{std::move(tokens)} {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[k];
  }
  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return peek().kind == TokenKind::End; }
  bool is_symbol(char c, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Symbol && t.text[0] == c;
  }
  bool is_ident(std::string_view name, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return t.kind == TokenKind::Ident && t.text == name;
  }
  bool accept_symbol(char c) {
    if (!is_symbol(c)) return false;
    next();
    return true;
  }
  const Token& expect_symbol(char c, std::string_view what) {
    if (!is_symbol(c)) fail("expected " + std::string{what});
    return next();
  }
  const Token& expect_ident(std::string_view name) {
    if (!is_ident(name)) fail("expected '" + std::string{name} + "'");
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    const std::string found = t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(message + ", found " + found, t.line, t.column);
  }

  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace xformlab::detail
