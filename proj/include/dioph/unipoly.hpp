#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/poly.hpp"
#include "dioph/scalar.hpp"

namespace dioph {

/// Dense univariate polynomial, coefficients stored lowest degree first with
/// no trailing zeros.
template <class F>
class UniPoly {
 public:
  using Field = F;
  using Element = typename F::Element;

  /// Degree reported for the zero polynomial (stands in for -infinity).
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(F field) : field_(std::move(field)) {}
  UniPoly(F field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(F field, const Element& c) { return UniPoly(field, {c}); }
  /// The monomial t^k.
  static UniPoly monomial(F field, std::size_t k) {
    std::vector<Element> c(k + 1, field.zero());
    c[k] = field.one();
    return UniPoly(field, std::move(c));
  }

  const F& field() const { return field_; }
  const std::vector<Element>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Element coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  Element leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    std::vector<Element> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(a.field_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Element> r = a.c_;
    for (auto& x : r) x = -x;
    return UniPoly(a.field_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (dioph::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(r));
  }
  UniPoly& operator+=(const UniPoly& b) { return *this = *this + b; }
  UniPoly& operator-=(const UniPoly& b) { return *this = *this - b; }
  UniPoly& operator*=(const UniPoly& b) { return *this = *this * b; }

  UniPoly scaled(const Element& s) const {
    std::vector<Element> r = c_;
    for (auto& x : r) x *= s;
    return UniPoly(field_, std::move(r));
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    check(d);
    if (d.is_zero()) throw Error(ErrorCode::zero_polynomial, "division by zero polynomial");
    std::vector<Element> rem = c_;
    const int dd = d.degree();
    if (degree() < dd) return {UniPoly(field_), *this};
    std::vector<Element> q(static_cast<std::size_t>(degree() - dd + 1), field_.zero());
    const Element inv = field_.one() / d.leading();
    for (int k = degree(); k >= dd; --k) {
      const Element c = rem[k] * inv;
      q[k - dd] = c;
      if (dioph::is_zero(c)) continue;
      for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.c_[j];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(field_, std::move(q)), UniPoly(field_, std::move(rem))};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.one() / leading());
  }

  UniPoly derivative() const {
    std::vector<Element> r;
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(c_[i] * field_.from_integer(Integer(static_cast<unsigned long>(i))));
    return UniPoly(field_, std::move(r));
  }

  Element evaluate(const Element& x) const {
    Element acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly pow(unsigned long n) const {
    UniPoly result = constant(field_, field_.one());
    UniPoly base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  /// p(t) -> p(t^k).
  UniPoly inflate(std::size_t k) const {
    if (k == 0) throw Error(ErrorCode::invalid_argument, "inflation by zero");
    if (is_zero()) return *this;
    std::vector<Element> r((c_.size() - 1) * k + 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return UniPoly(field_, std::move(r));
  }

  /// Embeds into a multivariate ring as a polynomial in variable var.
  Poly<F> to_poly(const std::vector<std::string>& vars, std::size_t var) const {
    Poly<F> p(field_, vars);
    Exponents e(vars.size(), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      e[var] = static_cast<std::uint32_t>(i);
      p.add_term(e, c_[i]);
    }
    return p;
  }

  /// Reads a multivariate polynomial that involves only var.
  static UniPoly from_poly(const Poly<F>& p, std::size_t var) {
    std::vector<Element> c;
    for (const auto& [e, v] : p.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != var && e[i] != 0)
          throw Error(ErrorCode::invalid_argument,
                      "polynomial involves more than the variable " + p.vars()[var]);
      if (c.size() <= e[var]) c.resize(e[var] + 1, p.field().zero());
      c[e[var]] = v;
    }
    return UniPoly(p.field(), std::move(c));
  }

  std::string to_string(const std::string& var = "t") const {
    return to_poly({var}, 0).to_string();
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }

  void check(const UniPoly& b) const {
    if (!(field_ == b.field_))
      throw Error(ErrorCode::domain_mismatch,
                  "scalar domains differ: " + field_.name() + " vs " + b.field_.name());
  }

 private:
  void trim() {
    while (!c_.empty() && dioph::is_zero(c_.back())) c_.pop_back();
  }

  F field_;
  std::vector<Element> c_;
};

using QUniPoly = UniPoly<RationalField>;
using FpUniPoly = UniPoly<PrimeField>;

/// Monic gcd. gcd(f, 0) = monic(f); both zero is an error.
template <class F>
UniPoly<F> uni_gcd(UniPoly<F> a, UniPoly<F> b) {
  a.check(b);
  if (a.is_zero() && b.is_zero())
    throw Error(ErrorCode::undefined_gcd, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Monic polynomial with the same roots as a, each of multiplicity one.
/// Uses a / gcd(a, a'), valid in characteristic zero.
template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "squarefree part of zero");
  if (a.field().characteristic() != 0)
    throw Error(ErrorCode::invalid_argument, "squarefree part requires characteristic zero");
  if (a.degree() == 0) return UniPoly<F>::constant(a.field(), a.field().one());
  return a.divmod(uni_gcd(a, a.derivative())).first.monic();
}

/// Exactly the rational roots of a, ascending, found with the rational root
/// theorem on the primitive integer form.
std::vector<Rational> rational_roots(const QUniPoly& a);

/// Clears denominators and content: the primitive integer polynomial with
/// positive leading coefficient proportional to a.
std::vector<Integer> primitive_integer_form(const QUniPoly& a);

}  // namespace dioph
