#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "geoprove/rational_function.hpp"

namespace geoprove {

struct Token {
  enum class Kind { Ident, Int, Sym, End };
  Kind kind = Kind::End;
  std::string text;
  int line = 0;
  int col = 0;

  bool is_sym(char ch) const { return kind == Kind::Sym && text.size() == 1 && text[0] == ch; }
  bool is_ident(std::string_view s) const { return kind == Kind::Ident && text == s; }
};

// Tokenizes identifiers, integer literals and single-character symbols;
// '#' starts a comment running to end of line.
std::vector<Token> tokenize(std::string_view source);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  const Token& next();
  bool at_end() const { return peek().kind == Token::Kind::End; }
  [[noreturn]] void fail(const std::string& message) const;
  void expect_sym(char ch, const std::string& what);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Arithmetic expression over the declared variables with + - * / ^,
// parentheses, rational literals, and implicit multiplication ("2bc" and
// "2*b*c" parse the same). Evaluates exactly.
RationalFunction parse_ratexpr(TokenStream& ts, const VarTablePtr& table);

// Raw-polynomial front end for the same syntax; rejects inputs whose
// denominator is not constant.
Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table);

RationalFunction parse_rational_function(std::string_view text, const VarTablePtr& table);

}  // namespace geoprove
