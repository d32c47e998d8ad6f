#pragma once

#include <utility>
#include <vector>

#include "dioph/error.hpp"
#include "dioph/poly.hpp"

namespace dioph {

template <class F>
using PolyMatrix = std::vector<std::vector<Poly<F>>>;

/// Sylvester matrix of a and b with respect to var: deg_b rows of a's
/// coefficients followed by deg_a rows of b's, highest power first.
template <class F>
PolyMatrix<F> sylvester_matrix(const Poly<F>& a, const Poly<F>& b, std::size_t var) {
  a.check_compatible(b);
  const auto ca = a.coefficients_in(var);
  const auto cb = b.coefficients_in(var);
  if (ca.empty() || cb.empty())
    throw Error(ErrorCode::zero_polynomial, "resultant with a zero polynomial");
  const std::size_t m = ca.size() - 1, n = cb.size() - 1, size = m + n;
  PolyMatrix<F> s(size, std::vector<Poly<F>>(size, a.zero_like()));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = ca[m - k];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = cb[n - k];
  return s;
}

/// Fraction-free (Bareiss) determinant over a polynomial ring.
template <class F>
Poly<F> bareiss_determinant(PolyMatrix<F> m, const Poly<F>& like) {
  const std::size_t n = m.size();
  if (n == 0) return like.constant_like(like.field().one());
  bool negate = false;
  Poly<F> prev = like.constant_like(like.field().one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return like.zero_like();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
      }
    }
    prev = m[k][k];
  }
  Poly<F> det = m[n - 1][n - 1];
  return negate ? -det : det;
}

/// Res_var(a, b) as the Sylvester determinant (rows of a first).
template <class F>
Poly<F> resultant(const Poly<F>& a, const Poly<F>& b, std::size_t var) {
  return bareiss_determinant(sylvester_matrix(a, b, var), a);
}

/// (-1)^(d(d-1)/2) Res_var(a, da/dvar) / lc_var(a); disc(x^2+bx+c) = b^2-4c.
template <class F>
Poly<F> discriminant(const Poly<F>& a, std::size_t var) {
  const int d = a.degree_in(var);
  if (d < 1) throw Error(ErrorCode::invalid_argument, "discriminant needs positive degree");
  const auto coeffs = a.coefficients_in(var);
  Poly<F> res = resultant(a, a.derivative(var), var).exact_divide(coeffs.back());
  return ((d * (d - 1) / 2) % 2) ? -res : res;
}

}  // namespace dioph
