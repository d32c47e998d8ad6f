#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/poly.hpp"

namespace dioph {

/// Parsed polynomial together with the text it came from.
template <class F>
struct PolyExpression {
  std::string source;
  std::vector<std::string> vars;
  Poly<F> poly;
};

namespace detail {

// Grammar (explicit '*' required, no implicit multiplication):
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' integer)?
//   primary := integer | integer '/' integer | name | '(' expr ')'
template <class F>
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars, const F& field)
      : text_(text), vars_(vars), field_(field) {}

  Poly<F> parse() {
    skip_ws();
    if (pos_ == text_.size()) throw SyntaxError(pos_, "empty expression");
    Poly<F> p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly<F> expr() {
    Poly<F> acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly<F> term() {
    Poly<F> acc = unary();
    while (accept('*')) acc *= unary();
    return acc;
  }

  Poly<F> unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Poly<F> power() {
    Poly<F> base = primary();
    if (accept('^')) {
      skip_ws();
      const std::size_t at = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw SyntaxError(at, "expected a non-negative integer exponent");
      if (digits.size() > 6) throw SyntaxError(at, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly<F> primary() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) throw SyntaxError(at, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly<F> inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(read_digits(), 10);
      Integer den = 1;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t dat = pos_;
        std::string d = read_digits();
        if (d.empty()) throw SyntaxError(dat, "expected a denominator");
        den = Integer(d, 10);
        if (den == 0) throw SyntaxError(dat, "zero denominator");
      }
      return Poly<F>::constant(field_, vars_, field_.from_rational(make_rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(at, pos_ - at));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end())
        throw Error(ErrorCode::unknown_variable,
                    "unknown variable '" + name + "' at offset " + std::to_string(at));
      return Poly<F>::variable(field_, vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    throw SyntaxError(at, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  const F& field_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
PolyExpression<F> parse_poly(std::string_view text, const std::vector<std::string>& vars,
                             const F& field) {
  detail::PolyParser<F> parser(text, vars, field);
  return PolyExpression<F>{std::string(text), vars, parser.parse()};
}

inline QPoly parse_qpoly(std::string_view text,
                         const std::vector<std::string>& vars = {"x", "y", "t"}) {
  return parse_poly(text, vars, RationalField{}).poly;
}

}  // namespace dioph
