#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/scalar.hpp"

namespace dioph {

/// One exponent per ring variable, in the ring's variable order.
using Exponents = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

/// Sparse multivariate polynomial over the field described by F.
///
/// Terms are kept in a map from exponent vectors to nonzero coefficients; the
/// map's ordering is lexicographic with the first variable most significant.
/// Values are immutable in the sense that every arithmetic operation returns a
/// fresh polynomial.
template <class F>
class Poly {
 public:
  using Field = F;
  using Element = typename F::Element;
  using TermMap = std::map<Exponents, Element>;

  Poly(F field, std::vector<std::string> vars)
      : field_(std::move(field)), vars_(std::move(vars)) {}

  static Poly constant(F field, std::vector<std::string> vars, const Element& c) {
    Poly p(std::move(field), std::move(vars));
    p.add_term(Exponents(p.nvars(), 0), c);
    return p;
  }

  static Poly variable(F field, std::vector<std::string> vars, std::size_t index,
                       std::uint32_t power = 1) {
    Poly p(std::move(field), std::move(vars));
    Exponents e(p.nvars(), 0);
    e.at(index) = power;
    p.add_term(e, p.field_.one());
    return p;
  }

  static Poly variable(F field, std::vector<std::string> vars, std::string_view name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      throw Error(ErrorCode::unknown_variable, "unknown variable '" + std::string(name) + "'");
    std::size_t idx = static_cast<std::size_t>(it - vars.begin());
    return variable(std::move(field), std::move(vars), idx);
  }

  const F& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::size_t var_index(std::string_view name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end())
      throw Error(ErrorCode::unknown_variable, "unknown variable '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - vars_.begin());
  }

  Poly zero_like() const { return Poly(field_, vars_); }
  Poly constant_like(const Element& c) const { return constant(field_, vars_, c); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && dioph::total_degree(terms_.begin()->first) == 0);
  }

  Element constant_term() const { return coefficient(Exponents(nvars(), 0)); }

  Element coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c * monomial(e); zero results are dropped.
  void add_term(const Exponents& e, const Element& c) {
    if (e.size() != nvars())
      throw Error(ErrorCode::domain_mismatch, "exponent vector length mismatch");
    if (dioph::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (dioph::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(dioph::total_degree(e)));
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  /// Joint degree in a subset of variables; -1 for the zero polynomial.
  int degree_in(std::span<const std::size_t> subset) const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (std::size_t v : subset) s += static_cast<int>(e[v]);
      d = std::max(d, s);
    }
    return d;
  }

  bool involves(std::size_t var) const { return degree_in(var) > 0; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }

  friend Poly operator-(const Poly& a) {
    Poly r = a.zero_like();
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r = a.zero_like();
    Exponents e(a.nvars());
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly scaled(const Element& c) const {
    Poly r = zero_like();
    if (dioph::is_zero(c)) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, v * c);
    return r;
  }

  /// Multiplies by the monomial x^shift.
  Poly shifted(const Exponents& shift) const {
    Poly r = zero_like();
    Exponents e(nvars());
    for (const auto& [ea, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + shift[i];
      r.terms_.emplace(e, c);
    }
    return r;
  }

  Poly pow(unsigned n) const {
    Poly result = constant_like(field_.one());
    Poly base = *this;
    while (n) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return result;
  }

  Poly derivative(std::size_t var) const {
    Poly r = zero_like();
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      --d[var];
      r.add_term(d, c * field_.from_integer(Integer(static_cast<unsigned long>(e[var]))));
    }
    return r;
  }

  /// Replaces var by a field constant; var stays in the ring with exponent 0.
  Poly substitute(std::size_t var, const Element& value) const {
    Poly r = zero_like();
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      Element v = c;
      Element pw = field_.one();
      for (std::uint32_t k = 0; k < e[var]; ++k) pw *= value;
      r.add_term(d, v * pw);
    }
    return r;
  }

  /// Replaces var by a polynomial of the same ring.
  Poly substitute(std::size_t var, const Poly& value) const {
    check_compatible(value);
    std::vector<Poly> coeffs = coefficients_in(var);
    Poly r = zero_like();
    for (std::size_t k = coeffs.size(); k-- > 0;) r = r * value + coeffs[k];
    return r;
  }

  Element evaluate(std::span<const Element> point) const {
    if (point.size() != nvars())
      throw Error(ErrorCode::domain_mismatch, "evaluation point has wrong dimension");
    Element sum = field_.zero();
    for (const auto& [e, c] : terms_) {
      Element t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
      sum += t;
    }
    return sum;
  }

  /// Coefficient k (as a polynomial free of var) of var^k, k = 0..deg.
  std::vector<Poly> coefficients_in(std::size_t var) const {
    int deg = degree_in(var);
    std::vector<Poly> out(static_cast<std::size_t>(std::max(deg + 1, 0)), zero_like());
    for (const auto& [e, c] : terms_) {
      Exponents d = e;
      d[var] = 0;
      out[e[var]].terms_.emplace(d, c);
    }
    return out;
  }

  static Poly from_coefficients(std::size_t var, const std::vector<Poly>& coeffs,
                                const Poly& like) {
    Poly r = like.zero_like();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      like.check_compatible(coeffs[k]);
      for (const auto& [e, c] : coeffs[k].terms_) {
        Exponents d = e;
        d[var] += static_cast<std::uint32_t>(k);
        r.add_term(d, c);
      }
    }
    return r;
  }

  /// Re-embeds the polynomial into a ring with a different variable list,
  /// matching variables by name. Variables in use must exist in the target.
  Poly with_vars(const std::vector<std::string>& target) const {
    std::vector<std::size_t> map(nvars());
    for (std::size_t i = 0; i < nvars(); ++i) {
      auto it = std::find(target.begin(), target.end(), vars_[i]);
      if (it == target.end()) {
        if (involves(i))
          throw Error(ErrorCode::unknown_variable,
                      "variable '" + vars_[i] + "' missing from target ring");
        map[i] = target.size();
      } else {
        map[i] = static_cast<std::size_t>(it - target.begin());
      }
    }
    Poly r(field_, target);
    for (const auto& [e, c] : terms_) {
      Exponents d(target.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (map[i] < target.size()) d[map[i]] = e[i];
      r.add_term(d, c);
    }
    return r;
  }

  /// Leading term for the map's own (lexicographic) ordering.
  const std::pair<const Exponents, Element>& lex_leading() const {
    if (is_zero()) throw Error(ErrorCode::zero_polynomial, "leading term of zero");
    return *terms_.rbegin();
  }

  Poly monic() const {
    if (is_zero()) return *this;
    Element inv = field_.one() / lex_leading().second;
    return scaled(inv);
  }

  /// Exact division in the polynomial ring; throws invalid_argument when the
  /// divisor does not divide this polynomial.
  Poly exact_divide(const Poly& d) const {
    check_compatible(d);
    if (d.is_zero()) throw Error(ErrorCode::zero_polynomial, "division by zero polynomial");
    const auto& [de, dc] = d.lex_leading();
    const Element dinv = field_.one() / dc;
    Poly rem = *this;
    Poly quot = zero_like();
    Exponents shift(nvars());
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.lex_leading();
      for (std::size_t i = 0; i < shift.size(); ++i) {
        if (re[i] < de[i]) throw Error(ErrorCode::invalid_argument, "inexact polynomial division");
        shift[i] = re[i] - de[i];
      }
      Element c = rc * dinv;
      quot.add_term(shift, c);
      rem -= d.shifted(shift).scaled(c);
    }
    return quot;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Terms by descending total degree, then descending lexicographic order.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::vector<const std::pair<const Exponents, Element>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
      auto da = dioph::total_degree(a->first), db = dioph::total_degree(b->first);
      if (da != db) return da > db;
      return a->first > b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
      auto [neg, mag] = split_sign(t->second);
      std::string mono;
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (t->first[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (t->first[i] > 1) mono += "^" + std::to_string(t->first[i]);
      }
      std::string body;
      if (mono.empty())
        body = mag;
      else if (mag == "1")
        body = mono;
      else
        body = mag + "*" + mono;
      if (first)
        out += neg ? "-" + body : body;
      else
        out += (neg ? " - " : " + ") + body;
      first = false;
    }
    return out;
  }

  void check_compatible(const Poly& b) const {
    if (!(field_ == b.field_))
      throw Error(ErrorCode::domain_mismatch,
                  "scalar domains differ: " + field_.name() + " vs " + b.field_.name());
    if (vars_ != b.vars_)
      throw Error(ErrorCode::domain_mismatch, "variable lists differ");
  }

 private:
  static std::pair<bool, std::string> split_sign(const Element& c) {
    if constexpr (std::is_same_v<Element, Rational>) {
      return {sgn(c) < 0, dioph::to_string(Rational(abs(c)))};
    } else {
      return {false, dioph::to_string(c)};
    }
  }

  F field_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

using QPoly = Poly<RationalField>;
using FpPoly = Poly<PrimeField>;

}  // namespace dioph
