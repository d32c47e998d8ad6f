#pragma once

// Test-only oracles: random generators and independent brute-force routes.
// Nothing here calls the library's elimination or Groebner code.

#include <random>
#include <utility>
#include <vector>

#include "dioph/poly.hpp"
#include "dioph/solver.hpp"
#include "dioph/unipoly.hpp"

namespace oracle {

using dioph::Exponents;
using dioph::QPoly;
using dioph::QUniPoly;
using dioph::Rational;
using dioph::RationalField;

inline const std::vector<std::string>& xyt() {
  static const std::vector<std::string> v{"x", "y", "t"};
  return v;
}

inline Rational random_coeff(std::mt19937& rng, bool fractions) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int n = num(rng);
  if (n == 0) n = 1;
  return fractions ? dioph::make_rational(n, den(rng)) : Rational(n);
}

/// Up to nterms random terms of total degree <= maxdeg in the first nvars of
/// (x, y, t).
inline QPoly random_poly(std::mt19937& rng, std::size_t nvars, unsigned maxdeg,
                         unsigned nterms, bool fractions = false) {
  QPoly p(RationalField{}, xyt());
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  for (unsigned k = 0; k < nterms; ++k) {
    Exponents e(3, 0);
    unsigned budget = deg(rng);
    for (std::size_t v = 0; v < nvars && budget > 0; ++v) {
      std::uniform_int_distribution<unsigned> take(0, budget);
      e[v] = (v + 1 == nvars) ? budget : take(rng);
      budget -= e[v];
    }
    p.add_term(e, random_coeff(rng, fractions));
  }
  return p;
}

inline QUniPoly random_unipoly(std::mt19937& rng, unsigned maxdeg) {
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<Rational> coeffs;
  unsigned d = deg(rng);
  for (unsigned i = 0; i <= d; ++i) coeffs.emplace_back(c(rng));
  if (coeffs.back() == 0) coeffs.back() = 1;
  return QUniPoly(RationalField{}, coeffs);
}

/// Two polynomials in x of degree <= maxdeg (at least 1), optionally with
/// coefficients linear in t.
inline std::pair<QPoly, QPoly> random_pair_in_x(std::mt19937& rng, unsigned maxdeg,
                                                bool with_param) {
  std::uniform_int_distribution<unsigned> deg(1, maxdeg);
  std::uniform_int_distribution<int> c(-3, 3);
  auto make = [&]() {
    QPoly p(RationalField{}, xyt());
    unsigned d = deg(rng);
    for (unsigned i = 0; i <= d; ++i) {
      p.add_term({i, 0, 0}, Rational(i == d && c(rng) == 0 ? 1 : c(rng)));
      if (with_param) p.add_term({i, 0, 1}, Rational(c(rng)));
    }
    if (p.degree_in(0) < 1) p.add_term({1, 0, 0}, Rational(1));
    return p;
  };
  QPoly a = make();
  QPoly b = make();
  return {a, b};
}

/// Sylvester matrix built directly from the definition: row i of the a-block
/// holds a's coefficients (highest first) shifted right by i.
inline std::vector<std::vector<QPoly>> naive_sylvester(const QPoly& a, const QPoly& b,
                                                       std::size_t var) {
  const int m = a.degree_in(var), n = b.degree_in(var);
  const int size = m + n;
  auto coeff = [&](const QPoly& p, int k) {
    QPoly c = p.zero_like();
    for (const auto& [e, v] : p.terms())
      if (static_cast<int>(e[var]) == k) {
        Exponents d = e;
        d[var] = 0;
        c.add_term(d, v);
      }
    return c;
  };
  std::vector<std::vector<QPoly>> s(size, std::vector<QPoly>(size, a.zero_like()));
  for (int r = 0; r < n; ++r)
    for (int col = r; col <= r + m; ++col) s[r][col] = coeff(a, m - (col - r));
  for (int r = 0; r < m; ++r)
    for (int col = r; col <= r + n; ++col) s[n + r][col] = coeff(b, n - (col - r));
  return s;
}

/// Cofactor expansion along the first row, skipping zero entries.
inline QPoly laplace_determinant(const std::vector<std::vector<QPoly>>& m, const QPoly& like) {
  const std::size_t n = m.size();
  if (n == 0) return like.constant_like(Rational(1));
  if (n == 1) return m[0][0];
  QPoly det = like.zero_like();
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<QPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    QPoly term = m[0][col] * laplace_determinant(minor, like);
    det = (col % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Random polynomial in t over F_p of degree <= maxdeg; nonzero if asked.
inline dioph::FpUniPoly random_fp_unipoly(std::mt19937& rng, const dioph::PrimeField& field,
                                          unsigned maxdeg, bool nonzero) {
  std::uniform_int_distribution<unsigned> deg(0, maxdeg);
  std::uniform_int_distribution<std::uint64_t> c(0, field.characteristic() - 1);
  std::vector<dioph::Fp> coeffs;
  const unsigned d = deg(rng);
  for (unsigned i = 0; i <= d; ++i) coeffs.emplace_back(c(rng), field.characteristic());
  if (nonzero && coeffs.back().residue() == 0) coeffs.back() = field.one();
  return dioph::FpUniPoly(field, coeffs);
}

template <class F>
dioph::Poly<F> lift_t(const dioph::UniPoly<F>& u) {
  return u.to_poly(xyt(), 2);
}

/// f = A (r x - p) + B (r y - q) with random A, B in F_p[x, y, t]: (p/r, q/r)
/// is a point of f by construction.
struct Planted {
  dioph::FpPoly f;
  dioph::FpPoint point;
};

inline Planted planted_fp_family(std::mt19937& rng, const dioph::PrimeField& field) {
  using dioph::FpPoly;
  std::uniform_int_distribution<std::uint64_t> c(0, field.characteristic() - 1);
  std::uniform_int_distribution<unsigned> small(0, 2);
  auto random_cofactor = [&] {
    FpPoly a(field, xyt());
    for (int k = 0; k < 3; ++k)
      a.add_term(Exponents{small(rng), small(rng), small(rng)}, dioph::Fp(c(rng), field.characteristic()));
    return a;
  };
  for (;;) {
    const auto p = random_fp_unipoly(rng, field, 2, false);
    const auto q = random_fp_unipoly(rng, field, 2, false);
    const auto r = random_fp_unipoly(rng, field, 2, true);
    const FpPoly x = FpPoly::variable(field, xyt(), 0), y = FpPoly::variable(field, xyt(), 1);
    const FpPoly f = random_cofactor() * (lift_t(r) * x - lift_t(p)) +
                     random_cofactor() * (lift_t(r) * y - lift_t(q));
    if (!f.is_zero()) return {f, dioph::FpPoint{p, q, r}};
  }
}

/// r^D f(p/r, q/r, t) by homogenizing in (x, y, z) and substituting polynomials
/// in t through Poly::substitute, D the (x, y)-degree of f.
template <class F>
bool vanishes_at(const dioph::Poly<F>& f, const dioph::FunctionFieldPoint<F>& pt) {
  const std::vector<std::string> ring{"x", "y", "z", "t"};
  const F& field = f.field();
  int d = 0;
  for (const auto& [e, c] : f.terms()) d = std::max(d, static_cast<int>(e[0] + e[1]));
  dioph::Poly<F> h(field, ring);
  for (const auto& [e, c] : f.terms())
    h.add_term(Exponents{e[0], e[1], static_cast<std::uint32_t>(d) - e[0] - e[1], e[2]}, c);
  auto in_t = [&](const dioph::UniPoly<F>& u) { return u.to_poly(ring, 3); };
  return h.substitute(0, in_t(pt.p)).substitute(1, in_t(pt.q)).substitute(2, in_t(pt.r)).is_zero();
}

}  // namespace oracle
