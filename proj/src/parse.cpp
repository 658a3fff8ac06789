#include "gbkit/parse.hpp"

#include <cctype>
#include <limits>
#include <optional>

namespace gbkit {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

enum class TokenKind { integer, identifier, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t position;
};

std::string describe(const Token& t) {
  if (t.kind == TokenKind::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (is_digit(c)) {
      while (i < text.size() && is_digit(text[i])) ++i;
      tokens.push_back({TokenKind::integer, text.substr(start, i - start), start});
      continue;
    }
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      tokens.push_back({TokenKind::identifier, text.substr(start, i - start), start});
      continue;
    }
    TokenKind kind;
    switch (c) {
      case '+': kind = TokenKind::plus; break;
      case '-': kind = TokenKind::minus; break;
      case '*': kind = TokenKind::star; break;
      case '/': kind = TokenKind::slash; break;
      case '^': kind = TokenKind::caret; break;
      case '(': kind = TokenKind::lparen; break;
      case ')': kind = TokenKind::rparen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
    }
    tokens.push_back({kind, text.substr(start, 1), start});
    ++i;
  }
  tokens.push_back({TokenKind::end, {}, text.size()});
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text, const VariableContext& ctx) : tokens_(tokenize(text)), ctx_(ctx) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (peek().kind != TokenKind::end) {
      throw ParseError("unexpected " + describe(peek()) + " after expression", peek().position);
    }
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  bool accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  Polynomial expr() {
    bool negate = false;
    if (accept(TokenKind::minus)) {
      negate = true;
    } else {
      accept(TokenKind::plus);
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept(TokenKind::plus)) {
        acc += term();
      } else if (accept(TokenKind::minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept(TokenKind::star)) {
        acc *= factor();
      } else if (peek().kind == TokenKind::slash) {
        const std::size_t slash_pos = advance().position;
        const Token& divisor = peek();
        if (divisor.kind != TokenKind::integer) {
          throw ParseError("divisor must be an integer literal, got " + describe(divisor),
                           divisor.position);
        }
        advance();
        Rational d(mpz_class(std::string(divisor.text), 10));
        if (accept(TokenKind::caret)) {
          Rational power(1);
          const auto e = exponent();
          for (std::uint32_t k = 0; k < e; ++k) power *= d;
          d = power;
        }
        if (d.is_zero()) throw ParseError("division by zero", slash_pos);
        acc *= d.inverse();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept(TokenKind::caret)) b = b.pow(exponent());
    return b;
  }

  std::uint32_t exponent() {
    const Token& t = peek();
    if (t.kind == TokenKind::minus) throw ParseError("negative exponent", t.position);
    if (t.kind != TokenKind::integer) {
      throw ParseError("expected nonnegative integer exponent, got " + describe(t), t.position);
    }
    advance();
    const mpz_class value(std::string(t.text), 10);
    if (value > std::numeric_limits<std::uint32_t>::max()) {
      throw ParseError("exponent too large", t.position);
    }
    return static_cast<std::uint32_t>(value.get_ui());
  }

  Polynomial base() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer:
        advance();
        return Polynomial::constant(ctx_, Rational(mpz_class(std::string(t.text), 10)));
      case TokenKind::identifier: {
        advance();
        const auto index = ctx_.index_of(t.text);
        if (!index) throw ParseError("unknown variable " + std::string(t.text), t.position);
        return Polynomial::variable(ctx_, *index);
      }
      case TokenKind::lparen: {
        advance();
        Polynomial inner = expr();
        if (!accept(TokenKind::rparen)) {
          throw ParseError("expected ')', got " + describe(peek()), peek().position);
        }
        return inner;
      }
      default:
        throw ParseError("expected a number, variable or '(', got " + describe(t), t.position);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const VariableContext& ctx_;
};

std::string format_monomial(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VariableContext& ctx) {
  return Parser(text, ctx).parse();
}

std::vector<Polynomial> parse_system(std::span<const std::string> texts, const VariableContext& ctx) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_polynomial(t, ctx));
  return out;
}

std::string format_polynomial(const Polynomial& p, MonomialOrder order) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [coefficient, monomial] : sorted_terms(p, order)) {
    const bool negative = coefficient.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = coefficient.abs();
    if (monomial.is_unit()) {
      out += magnitude.to_string();
    } else {
      if (!magnitude.is_one()) out += magnitude.to_string() + "*";
      out += format_monomial(monomial, p.context());
    }
  }
  return out;
}

}  // namespace gbkit
