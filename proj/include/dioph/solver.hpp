#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "dioph/fibration.hpp"
#include "dioph/groebner.hpp"
#include "dioph/poly.hpp"
#include "dioph/unipoly.hpp"

namespace dioph {

// ---- x^3 + y^3 = m over the integers ---------------------------------------

struct IntegerPoint {
  Integer x;
  Integer y;

  friend bool operator==(const IntegerPoint& a, const IntegerPoint& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator<(const IntegerPoint& a, const IntegerPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

/// Largest brute-force radius accepted (the scan is quadratic in it).
inline constexpr long kBruteForceRadiusCap = 20000;

/// Every (x, y) with |x|, |y| <= cubesum_coordinate_bound(m), sorted.
std::vector<IntegerPoint> solve_cubesum_bruteforce(const Integer& m);
/// Same set through m = (x + y)(x^2 - xy + y^2): for each divisor a of m,
/// solve x + y = a, x^2 - xy + y^2 = m / a.
std::vector<IntegerPoint> solve_cubesum_divisor(const Integer& m);

/// Values m in [lo, hi] (m != 0) where the two solvers disagree.
std::vector<long> cubesum_mismatches(long lo, long hi);
std::vector<long> cubesum_mismatches_serial(long lo, long hi);

/// counts[n] = number of n = x^3 + y^3 with 1 <= x <= y, for n <= limit.
std::vector<std::uint32_t> cube_pair_counts(std::uint64_t limit);
std::vector<std::uint32_t> cube_pair_counts_serial(std::uint64_t limit);

/// Smallest n with at least `ways` representations as x^3 + y^3 over the
/// naturals 1 <= x <= y. Only ways = 2 is supported.
Integer taxicab_smallest(unsigned ways = 2);

/// sup(|p|, |q|, |r|) for (x, y) = (p/r, q/r) in lowest terms, r > 0.
Integer nf_height(const Rational& x, const Rational& y);

// ---- points over K(t) -------------------------------------------------------

/// (x, y) = (p/r, q/r) with p, q, r in K[t].
template <class F>
struct FunctionFieldPoint {
  UniPoly<F> p, q, r;

  /// Divides out gcd(p, q, r) and makes r monic.
  FunctionFieldPoint normalized() const {
    if (r.is_zero()) throw Error(ErrorCode::invalid_argument, "denominator r is zero");
    UniPoly<F> g = uni_gcd(uni_gcd_or_zero(p, q), r);
    FunctionFieldPoint out{p.divmod(g).first, q.divmod(g).first, r.divmod(g).first};
    const typename F::Element inv = r.field().one() / out.r.leading();
    out.p = out.p.scaled(inv);
    out.q = out.q.scaled(inv);
    out.r = out.r.scaled(inv);
    return out;
  }

  std::string to_string() const {
    return "(" + p.to_string() + ", " + q.to_string() + ", " + r.to_string() + ")";
  }

  friend bool operator==(const FunctionFieldPoint& a, const FunctionFieldPoint& b) {
    return a.p == b.p && a.q == b.q && a.r == b.r;
  }

 private:
  static UniPoly<F> uni_gcd_or_zero(const UniPoly<F>& a, const UniPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) return a;
    return uni_gcd(a, b);
  }
};

using QPoint = FunctionFieldPoint<RationalField>;
using FpPoint = FunctionFieldPoint<PrimeField>;

/// supdeg(p, q, r) of the normalized point; the zero polynomial contributes
/// nothing.
template <class F>
unsigned ff_height(const FunctionFieldPoint<F>& pt) {
  const auto n = pt.normalized();
  return static_cast<unsigned>(std::max({n.p.degree(), n.q.degree(), n.r.degree(), 0}));
}

/// Whether f(p/r, q/r, t) vanishes, tested as
/// sum c p^i q^j r^(D-i-j) t^k == 0 with D the (x, y)-degree of f.
template <class F>
bool verify_ff_solution(const Poly<F>& f, const FunctionFieldPoint<F>& pt) {
  if (pt.r.is_zero()) throw Error(ErrorCode::invalid_argument, "denominator r is zero");
  const Poly<F> g = f.with_vars(family_ring());
  if (g.field() != pt.p.field() || g.field() != pt.q.field() || g.field() != pt.r.field())
    throw Error(ErrorCode::domain_mismatch, "polynomial and point live over different fields");
  const std::size_t xy[] = {0, 1};
  const int d = std::max(g.degree_in(xy), 0);
  auto powers = [&](const UniPoly<F>& base) {
    std::vector<UniPoly<F>> v{UniPoly<F>::constant(base.field(), base.field().one())};
    for (int i = 0; i < d; ++i) v.push_back(v.back() * base);
    return v;
  };
  const auto pp = powers(pt.p), qp = powers(pt.q), rp = powers(pt.r);
  UniPoly<F> sum(g.field());
  for (const auto& [e, c] : g.terms())
    sum += (pp[e[0]] * qp[e[1]] * rp[d - e[0] - e[1]] * UniPoly<F>::monomial(g.field(), e[2]))
               .scaled(c);
  return sum.is_zero();
}

enum class SearchMode { polynomial, rational };

struct SearchResult {
  /// Verified, normalized, sorted by height then text.
  std::vector<QPoint> points;
  /// Coefficient solutions with irrational coordinates (not returned).
  std::size_t unresolved_branches = 0;
  /// Polynomial systems handed to the solver.
  std::size_t systems = 0;
};

/// All Q(t)-points of f of height at most N whose ansatz coefficients are
/// rational. Polynomial mode fixes r = 1; rational mode runs every degree
/// profile with monic r. Profiles are searched in parallel.
SearchResult search_ff_solutions(const QPoly& f, unsigned N, SearchMode mode,
                                 const GroebnerOptions& options = {});
/// Single-threaded reference for search_ff_solutions.
SearchResult search_ff_solutions_serial(const QPoly& f, unsigned N, SearchMode mode,
                                        const GroebnerOptions& options = {});

// ---- Frobenius over F_p(t) ----------------------------------------------------

/// p^n as a machine integer; throws resource_limit on overflow.
std::uint64_t frobenius_power(std::uint64_t p, unsigned n);

/// Raises every t-coefficient to the p^n-th power: t -> t^(p^n).
template <class F>
Poly<F> frobenius_twist(const Poly<F>& f, unsigned n) {
  const std::uint64_t p = f.field().characteristic();
  if (p == 0) throw Error(ErrorCode::domain_mismatch, "Frobenius twisting needs characteristic p");
  const std::uint64_t q = frobenius_power(p, n);
  const auto& vars = f.vars();
  const auto it = std::find(vars.begin(), vars.end(), "t");
  if (it == vars.end()) return f;
  const std::size_t t = static_cast<std::size_t>(it - vars.begin());
  Poly<F> out = f.zero_like();
  for (const auto& [e, c] : f.terms()) {
    Exponents d = e;
    const std::uint64_t k = static_cast<std::uint64_t>(e[t]) * q;
    if (k > UINT32_MAX) throw Error(ErrorCode::resource_limit, "twisted t-degree overflows");
    d[t] = static_cast<std::uint32_t>(k);
    out.add_term(d, c);
  }
  return out;
}

/// (p, q, r) -> (p^(p^n), q^(p^n), r^(p^n)), normalized.
FpPoint twist_solution(const FpPoint& pt, unsigned n);

/// False when pt is an n-fold twist (n >= 0) of one of the prior points.
bool is_new_solution(const FpPoint& pt, const std::vector<FpPoint>& prior);

}  // namespace dioph
