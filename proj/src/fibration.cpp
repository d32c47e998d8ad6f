#include "dioph/fibration.hpp"

#include <algorithm>

namespace dioph {

namespace {

constexpr std::size_t kX = 0, kY = 1, kZ = 2, kT = 3;

const std::vector<std::string>& projective_ring() {
  static const std::vector<std::string> v{"x", "y", "z", "t"};
  return v;
}

QPoly as_family(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "family polynomial is zero");
  return f.with_vars(family_ring());
}

std::vector<QPoly> nonzero(std::vector<QPoly> polys) {
  std::erase_if(polys, [](const QPoly& p) { return p.is_zero(); });
  return polys;
}

// Generator of I ∩ Q[last variable] via a lex basis; zero when that
// intersection is the zero ideal.
QUniPoly last_variable_eliminant(const std::vector<QPoly>& polys, const GroebnerOptions& options) {
  const std::size_t n = polys.front().nvars();
  const std::vector<std::size_t> keep{n - 1};
  IdealBasis g = eliminate(buchberger(polys, MonomialOrder::lex(n), options), keep);
  if (g.is_zero_ideal()) return QUniPoly(RationalField{});
  return QUniPoly::from_poly(g.generators.front(), n - 1).monic();
}

// gcd of univariate polynomials; zero when all are zero.
QUniPoly gcd_all(const std::vector<QUniPoly>& polys) {
  QUniPoly g(RationalField{});
  for (const auto& p : polys)
    if (!p.is_zero()) g = g.is_zero() ? p.monic() : uni_gcd(g, p);
  return g;
}

QUniPoly restrict_to_x(const QPoly& curve, const Rational& y, const Rational& z) {
  return QUniPoly::from_poly(curve.substitute(kY, y).substitute(kZ, z), kX);
}

QPoly hessian(const QPoly& c, std::size_t u, std::size_t v) {
  return c.derivative(u).derivative(u) * c.derivative(v).derivative(v) -
         c.derivative(u).derivative(v).pow(2);
}

bool has_no_common_zero(const std::vector<QPoly>& polys, const GroebnerOptions& options) {
  auto gens = nonzero(polys);
  if (gens.empty()) return false;
  return buchberger(gens, MonomialOrder::degrevlex(gens.front().nvars()), options).is_unit();
}

unsigned degree_of(const QPoly& curve) { return static_cast<unsigned>(curve.total_degree()); }

// Fewest singular points a reduced nodal curve of degree r can have when it
// splits over C and contains no line defined over Q. A line among the
// components is then never alone (its conjugates are components too).
std::size_t min_nodes_if_reducible(unsigned r) {
  if (r <= 1) return static_cast<std::size_t>(-1);
  if (r == 2) return 1;
  if (r == 3) return 3;
  return 2 * static_cast<std::size_t>(r) - 4;
}

QPoly plane_var(std::size_t v) { return QPoly::variable(RationalField{}, plane_ring(), v); }

// Divides out every line defined over Q; returns their number and leaves the
// residual curve in place.
unsigned remove_rational_lines(QPoly& curve) {
  unsigned lines = 0;
  auto take = [&](const QPoly& line) {
    curve = curve.exact_divide(line);
    ++lines;
  };
  if (curve.total_degree() > 0 && curve.substitute(kZ, Rational(0)).is_zero()) take(plane_var(kZ));
  if (curve.total_degree() > 0 && curve.substitute(kY, Rational(0)).is_zero()) take(plane_var(kY));

  // y = g z with g != 0: g is a root of every x-coefficient at (y, z) = (g, 1).
  if (curve.total_degree() > 0) {
    const QPoly top = curve.coefficients_in(kX).back();
    const auto candidates =
        rational_roots(QUniPoly::from_poly(top.substitute(kZ, Rational(1)), kY));
    for (const auto& g : candidates) {
      if (sgn(g) == 0 || curve.total_degree() == 0) continue;
      if (curve.substitute(kY, plane_var(kZ).scaled(g)).is_zero())
        take(plane_var(kY) - plane_var(kZ).scaled(g));
    }
  }

  // x = a y + b z: a is a root of C(X, 1, 0) and b of C(X, 0, 1).
  if (curve.total_degree() > 0) {
    const auto as = rational_roots(restrict_to_x(curve, 1, 0));
    const auto bs = rational_roots(restrict_to_x(curve, 0, 1));
    for (const auto& a : as)
      for (const auto& b : bs) {
        if (curve.total_degree() == 0) break;
        const QPoly rhs = plane_var(kY).scaled(a) + plane_var(kZ).scaled(b);
        if (curve.substitute(kX, rhs).is_zero()) take(plane_var(kX) - rhs);
      }
  }
  return lines;
}

}  // namespace

const std::vector<std::string>& family_ring() {
  static const std::vector<std::string> v{"x", "y", "t"};
  return v;
}

const std::vector<std::string>& plane_ring() {
  static const std::vector<std::string> v{"x", "y", "z"};
  return v;
}

std::pair<unsigned, unsigned> degrees(const QPoly& f) {
  const QPoly g = as_family(f);
  const std::size_t xy[] = {0, 1};
  const int d = g.degree_in(xy);
  if (d < 1)
    throw Error(ErrorCode::invalid_argument, "family polynomial is constant in x and y");
  return {static_cast<unsigned>(d), static_cast<unsigned>(std::max(g.degree_in(2), 0))};
}

unsigned generic_genus(unsigned d) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "plane curve degree must be positive");
  return (d - 1) * (d - 2) / 2;
}

QPoly homogenize(const QPoly& f) {
  const QPoly g = as_family(f);
  const auto [d, e] = degrees(g);
  QPoly out(RationalField{}, projective_ring());
  for (const auto& [ex, c] : g.terms())
    out.add_term({ex[0], ex[1], d - ex[0] - ex[1], ex[2]}, c);
  return out;
}

QPoly fiber_at(const QPoly& f, const Rational& t0) {
  QPoly c = homogenize(f).substitute(kT, t0).with_vars(plane_ring());
  if (c.is_zero())
    throw Error(ErrorCode::degenerate_family,
                "fiber over t = " + to_string(t0) + " is the whole plane");
  return c;
}

QPoly fiber_at_infinity(const QPoly& f) {
  const QPoly h = homogenize(f);
  return h.coefficients_in(kT).back().with_vars(plane_ring());
}

SingularFiberLocus singular_fiber_locus(const QPoly& f, const GroebnerOptions& options) {
  const QPoly h = homogenize(f);
  const QPoly hx = h.derivative(kX), hy = h.derivative(kY), hz = h.derivative(kZ);
  auto degenerate = [] {
    return Error(ErrorCode::degenerate_family,
                 "every fiber is singular (the generic fiber is not smooth)");
  };

  // Chart z = 1: singular points satisfy F = F_x = F_y = 0 there.
  const std::vector<std::string> xyt{"x", "y", "t"};
  std::vector<QPoly> affine;
  for (const auto& p : {h, hx, hy}) affine.push_back(p.substitute(kZ, Rational(1)).with_vars(xyt));
  const QUniPoly g1 = last_variable_eliminant(nonzero(affine), options);
  if (g1.is_zero()) throw degenerate();

  // Line at infinity z = 0 in the chart y = 1.
  const std::vector<std::string> xt{"x", "t"};
  std::vector<QPoly> at_infinity;
  for (const auto& p : {h, hx, hy, hz})
    at_infinity.push_back(p.substitute(kZ, Rational(0)).substitute(kY, Rational(1)).with_vars(xt));
  at_infinity = nonzero(at_infinity);
  if (at_infinity.empty()) throw degenerate();
  const QUniPoly g2 = last_variable_eliminant(at_infinity, options);
  if (g2.is_zero()) throw degenerate();

  // The point (1 : 0 : 0).
  std::vector<QUniPoly> corner;
  for (const auto& p : {h, hx, hy, hz})
    corner.push_back(QUniPoly::from_poly(
        p.substitute(kX, Rational(1)).substitute(kY, Rational(0)).substitute(kZ, Rational(0)), kT));
  const QUniPoly g3 = gcd_all(corner);
  if (g3.is_zero()) throw degenerate();

  SingularFiberLocus locus;
  locus.finite_parameters = squarefree_part(g1 * g2 * g3);
  const SingularPoints top = singular_points(fiber_at_infinity(f), options);
  locus.infinity_is_singular = !top.finite || top.count > 0;
  return locus;
}

unsigned count_singular_fibers(const SingularFiberLocus& locus) {
  return static_cast<unsigned>(std::max(locus.finite_parameters.degree(), 0)) +
         (locus.infinity_is_singular ? 1u : 0u);
}

SingularPoints singular_points(const QPoly& curve, const GroebnerOptions& options) {
  const QPoly c = curve.with_vars(plane_ring());
  if (c.is_zero()) throw Error(ErrorCode::zero_polynomial, "curve polynomial is zero");
  SingularPoints out;

  // Chart z = 1.
  const std::vector<std::string> xy{"x", "y"};
  const QPoly a = c.substitute(kZ, Rational(1)).with_vars(xy);
  const auto affine = nonzero({a, a.derivative(0), a.derivative(1)});
  if (affine.empty()) {
    out.finite = false;
    return out;
  }
  IdealBasis g = buchberger(affine, MonomialOrder::degrevlex(2), options);
  if (!g.is_unit()) {
    if (!is_zero_dimensional(g)) {
      out.finite = false;
      return out;
    }
    out.count += quotient_dimension(zero_dimensional_radical(g, options));
    std::vector<QPoly> with_hessian = g.generators;
    with_hessian.push_back(hessian(a, 0, 1));
    if (!has_no_common_zero(with_hessian, options)) out.nodal = false;
  }

  // Points (x : 1 : 0), local coordinates (x, z).
  const QPoly b = c.substitute(kY, Rational(1));
  const std::vector<QUniPoly> on_line{restrict_to_x(b, 1, 0),
                                      restrict_to_x(b.derivative(kX), 1, 0),
                                      restrict_to_x(b.derivative(kZ), 1, 0)};
  const QUniPoly u = gcd_all(on_line);
  if (u.is_zero()) {
    out.finite = false;
    return out;
  }
  if (u.degree() > 0) {
    const QUniPoly sq = squarefree_part(u);
    out.count += static_cast<std::size_t>(sq.degree());
    if (uni_gcd(sq, restrict_to_x(hessian(b, kX, kZ), 1, 0)).degree() > 0) out.nodal = false;
  }

  // The point (1 : 0 : 0), local coordinates (y, z).
  const QPoly k = c.substitute(kX, Rational(1));
  const std::vector<Rational> origin{1, 0, 0};
  if (sgn(k.evaluate(origin)) == 0 && sgn(k.derivative(kY).evaluate(origin)) == 0 &&
      sgn(k.derivative(kZ).evaluate(origin)) == 0) {
    ++out.count;
    if (sgn(hessian(k, kY, kZ).evaluate(origin)) == 0) out.nodal = false;
  }
  return out;
}

unsigned fiber_rational_components(const QPoly& curve, const GroebnerOptions& options) {
  QPoly c = curve.with_vars(plane_ring());
  const SingularPoints whole = singular_points(c, options);
  if (!whole.finite)
    throw Error(ErrorCode::unsupported,
                "fiber " + c.to_string() + " is non-reduced; supply k explicitly");
  if (whole.count == 0) return 0;

  // Lines count whatever singularities they meet; the genus test below needs
  // a nodal residual.
  unsigned k = remove_rational_lines(c);
  const unsigned r = degree_of(c);
  if (r == 0) return k;
  const SingularPoints residual = singular_points(c, options);
  if (!residual.nodal)
    throw Error(ErrorCode::unsupported,
                "fiber component " + c.to_string() +
                    " has a singularity worse than a node; supply k explicitly");
  const std::size_t nodes = residual.count;
  if (nodes >= min_nodes_if_reducible(r))
    throw Error(ErrorCode::unsupported,
                "cannot certify that the residual component " + c.to_string() +
                    " is irreducible; supply k explicitly");
  const std::size_t arithmetic_genus = static_cast<std::size_t>(r - 1) * (r - 2) / 2;
  if (nodes > arithmetic_genus)
    throw Error(ErrorCode::unsupported,
                "node count exceeds the arithmetic genus of " + c.to_string() +
                    "; supply k explicitly");
  if (nodes == arithmetic_genus) ++k;
  return k;
}

ComponentCount rational_components(const QPoly& f, const SingularFiberLocus& locus,
                                   const GroebnerOptions& options) {
  const auto roots = rational_roots(locus.finite_parameters);
  if (static_cast<int>(roots.size()) != locus.finite_parameters.degree())
    throw Error(ErrorCode::unsupported,
                "singular parameters are not all rational (roots of " +
                    locus.finite_parameters.to_string() + "); supply k explicitly");
  ComponentCount out;
  for (const auto& t0 : roots) out.k += fiber_rational_components(fiber_at(f, t0), options);
  if (locus.infinity_is_singular)
    out.k += fiber_rational_components(fiber_at_infinity(f), options);
  return out;
}

Integer omega_sq_bidegree(unsigned d, unsigned e) {
  if (d < 1) throw Error(ErrorCode::invalid_argument, "degree d must be positive");
  return Integer(3) * e * (Integer(d) - 1) * (Integer(d) - 3);
}

FamilyInvariants extract_invariants(const QPoly& f, const InvariantOverrides& overrides,
                                    const GroebnerOptions& options) {
  FamilyInvariants inv;
  std::tie(inv.d, inv.e) = degrees(f);
  inv.g = generic_genus(inv.d);
  inv.omega_sq = Rational(omega_sq_bidegree(inv.d, inv.e));
  if (!overrides.s || !overrides.k) inv.locus = singular_fiber_locus(f, options);
  if (overrides.s) {
    inv.s = *overrides.s;
    inv.s_source = ValueSource::user_supplied;
  } else {
    inv.s = count_singular_fibers(*inv.locus);
  }
  if (overrides.k) {
    inv.k = *overrides.k;
    inv.k_source = ValueSource::user_supplied;
  } else {
    inv.k = rational_components(f, *inv.locus, options).k;
  }
  return inv;
}

}  // namespace dioph
