#include "geoprove/expr_parse.hpp"

#include <cctype>

#include "geoprove/errors.hpp"

namespace geoprove {

std::vector<Token> tokenize(std::string_view source) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (source[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < source.size()) {
    char ch = source[i];
    if (ch == '#') {
      std::size_t j = i;
      while (j < source.size() && source[j] != '\n') ++j;
      advance(j - i);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < source.size() &&
             (std::isalnum(static_cast<unsigned char>(source[j])) || source[j] == '_'))
        ++j;
      tok.kind = Token::Kind::Ident;
      tok.text = std::string(source.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < source.size() && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
      tok.kind = Token::Kind::Int;
      tok.text = std::string(source.substr(i, j - i));
      advance(j - i);
    } else {
      static const std::string allowed = "(),;=:+-*/^";
      if (allowed.find(ch) == std::string::npos)
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
      tok.kind = Token::Kind::Sym;
      tok.text = std::string(1, ch);
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Token::Kind::End;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t idx = std::min(pos_ + ahead, tokens_.size() - 1);
  return tokens_[idx];
}

const Token& TokenStream::next() {
  const Token& t = tokens_[pos_];
  if (pos_ + 1 < tokens_.size()) ++pos_;
  return t;
}

void TokenStream::fail(const std::string& message) const {
  const Token& t = peek();
  throw ParseError(message, t.line, t.col);
}

void TokenStream::expect_sym(char ch, const std::string& what) {
  if (!peek().is_sym(ch)) fail("expected '" + std::string(1, ch) + "' " + what);
  next();
}

namespace {

// An identifier used inside an expression either names one declared
// variable or, failing that, splits greedily into declared names so that
// juxtapositions like "bc" read as b*c.
RationalFunction resolve_ident(const Token& tok, const VarTablePtr& table) {
  if (auto idx = table->index_of(tok.text))
    return RationalFunction::variable(table, *idx);
  RationalFunction acc = RationalFunction::constant(table, Rational(1));
  std::string_view rest = tok.text;
  while (!rest.empty()) {
    std::size_t take = 0;
    for (std::size_t len = rest.size(); len >= 1; --len) {
      if (table->index_of(rest.substr(0, len))) {
        take = len;
        break;
      }
    }
    if (take == 0)
      throw ParseError("unknown variable '" + tok.text + "'", tok.line, tok.col);
    acc = acc * RationalFunction::variable(table, *table->index_of(rest.substr(0, take)));
    rest.remove_prefix(take);
  }
  return acc;
}

bool starts_primary(const Token& t) {
  return t.kind == Token::Kind::Ident || t.kind == Token::Kind::Int || t.is_sym('(');
}

RationalFunction parse_expr(TokenStream& ts, const VarTablePtr& table);

RationalFunction parse_primary(TokenStream& ts, const VarTablePtr& table) {
  const Token& t = ts.peek();
  if (t.kind == Token::Kind::Int) {
    Rational value(ts.next().text);
    value.canonicalize();
    return RationalFunction::constant(table, value);
  }
  if (t.kind == Token::Kind::Ident) return resolve_ident(ts.next(), table);
  if (t.is_sym('(')) {
    ts.next();
    RationalFunction inner = parse_expr(ts, table);
    ts.expect_sym(')', "to close the parenthesized expression");
    return inner;
  }
  ts.fail("expected a number, variable or '('");
}

RationalFunction parse_postfix(TokenStream& ts, const VarTablePtr& table) {
  RationalFunction base = parse_primary(ts, table);
  while (ts.peek().is_sym('^')) {
    ts.next();
    const Token& e = ts.peek();
    if (e.kind != Token::Kind::Int) ts.fail("expected a non-negative integer exponent");
    unsigned long exp = std::stoul(ts.next().text);
    base = base.pow(static_cast<unsigned>(exp));
  }
  return base;
}

RationalFunction parse_unary(TokenStream& ts, const VarTablePtr& table) {
  if (ts.peek().is_sym('-')) {
    ts.next();
    return -parse_unary(ts, table);
  }
  if (ts.peek().is_sym('+')) {
    ts.next();
    return parse_unary(ts, table);
  }
  return parse_postfix(ts, table);
}

RationalFunction parse_term(TokenStream& ts, const VarTablePtr& table) {
  RationalFunction acc = parse_unary(ts, table);
  while (true) {
    const Token& t = ts.peek();
    if (t.is_sym('*')) {
      ts.next();
      acc = acc * parse_unary(ts, table);
    } else if (t.is_sym('/')) {
      const Token op = t;
      ts.next();
      RationalFunction rhs = parse_unary(ts, table);
      if (rhs.is_zero())
        throw ParseError("division by an identically zero expression", op.line, op.col);
      acc = acc / rhs;
    } else if (starts_primary(t)) {
      acc = acc * parse_postfix(ts, table);  // implicit multiplication
    } else {
      return acc;
    }
  }
}

RationalFunction parse_expr(TokenStream& ts, const VarTablePtr& table) {
  RationalFunction acc = parse_term(ts, table);
  while (true) {
    const Token& t = ts.peek();
    if (t.is_sym('+')) {
      ts.next();
      acc = acc + parse_term(ts, table);
    } else if (t.is_sym('-')) {
      ts.next();
      acc = acc - parse_term(ts, table);
    } else {
      return acc;
    }
  }
}

}  // namespace

RationalFunction parse_ratexpr(TokenStream& ts, const VarTablePtr& table) {
  return parse_expr(ts, table);
}

RationalFunction parse_rational_function(std::string_view text, const VarTablePtr& table) {
  TokenStream ts(tokenize(text));
  RationalFunction value = parse_expr(ts, table);
  if (!ts.at_end()) ts.fail("trailing input after expression");
  return value;
}

Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table) {
  RationalFunction value = parse_rational_function(text, table);
  if (!value.is_polynomial())
    throw MathError("expression is not a polynomial: " + std::string(text));
  return value.num();
}

}  // namespace geoprove
