#include <doctest.h>

#include <array>
#include <random>

#include "dioph/fibration.hpp"
#include "dioph/parse.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

const char* const kLegendre = "y^2 - x*(x-1)*(x-t)";
const char* const kQuarticFamily = "y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x";
const char* const kConicPencil = "x^2 + y^2 - 1 + t*x*y";

QPoly F(std::string_view s) { return parse_qpoly(s); }
QPoly C(std::string_view s) { return parse_qpoly(s, plane_ring()); }
QUniPoly U(std::string_view s) { return QUniPoly::from_poly(parse_qpoly(s, {"t"}), 0); }

ErrorCode code_of(auto&& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_argument;
}

// Intersection ring of P^2 x P^1: classes a*H1^2*H2 read off after
// truncating H1^3 = 0 and H2^2 = 0. Divisors are (coefficient of H1, of H2).
Integer top_intersection(std::array<Integer, 2> a, std::array<Integer, 2> b,
                         std::array<Integer, 2> c) {
  // Expand the product of three linear forms; only H1^2 H2 survives.
  Integer total = 0;
  const std::array<std::array<Integer, 2>, 3> forms{a, b, c};
  for (int mask = 0; mask < 8; ++mask) {
    int h2 = 0;
    Integer coeff = 1;
    for (int i = 0; i < 3; ++i) {
      const int pick = (mask >> i) & 1;
      h2 += pick;
      coeff *= forms[i][pick];
    }
    if (h2 == 1) total += coeff;
  }
  return total;
}

}  // namespace

TEST_CASE("degrees examples") {
  CHECK(degrees(F(kQuarticFamily)) == std::pair{4u, 3u});
  CHECK(degrees(F("x + y")) == std::pair{1u, 0u});
  CHECK(degrees(F("(t^4+t)*y^3 - (t^3+1)*x^4 - t*x^3 + t^4")) == std::pair{4u, 4u});
  CHECK(code_of([] { (void)degrees(F("t^2 + 1")); }) == ErrorCode::invalid_argument);
  CHECK(code_of([] { (void)degrees(F("0")); }) == ErrorCode::zero_polynomial);
}

TEST_CASE("generic genus") {
  CHECK(generic_genus(4) == 3);
  CHECK(generic_genus(1) == 0);
  CHECK(generic_genus(2) == 0);
  for (unsigned d = 4; d <= 30; ++d) CHECK(generic_genus(d) >= 3);
  CHECK_THROWS_AS(generic_genus(0), Error);
}

TEST_CASE("homogenization and fibers") {
  CHECK(homogenize(F(kLegendre)) ==
        parse_qpoly("y^2*z - x*(x-z)*(x-t*z)", {"x", "y", "z", "t"}));
  CHECK(fiber_at(F(kLegendre), 0) == C("y^2*z - x^2*(x-z)"));
  CHECK(fiber_at_infinity(F(kLegendre)) == C("x*z*(x-z)"));
  CHECK(code_of([] { (void)fiber_at(F("(t-1)*(x^2+y^2-1)"), 1); }) ==
        ErrorCode::degenerate_family);
}

TEST_CASE("Legendre family locus matches the root-difference discriminant") {
  const auto locus = singular_fiber_locus(F(kLegendre));
  // Independent route: y^2 = x(x-1)(x-t) is singular exactly where the cubic
  // has a repeated root; the product of squared root differences of 0, 1, t is
  // t^2 (t-1)^2.
  const QUniPoly t = U("t"), one = U("1");
  const QUniPoly disc = (t * t) * ((t - one) * (t - one));
  CHECK(locus.finite_parameters == squarefree_part(disc));
  CHECK(rational_roots(locus.finite_parameters) == std::vector<Rational>{0, 1});
  // Over infinity the fiber is x z (x - z): three lines through (0 : 1 : 0).
  CHECK(locus.infinity_is_singular);
  CHECK(count_singular_fibers(locus) == 3);
}

TEST_CASE("quartic family is singular over t = 0") {
  const auto locus = singular_fiber_locus(F(kQuarticFamily));
  CHECK(sgn(locus.finite_parameters.evaluate(0)) == 0);
  CHECK(locus.finite_parameters == U("t"));
  // The top t-coefficient x z^3 is non-reduced.
  CHECK(locus.infinity_is_singular);
}

TEST_CASE("families constant in t") {
  const auto smooth = singular_fiber_locus(F("x^2 + y^2 - 1"));
  CHECK(smooth.finite_parameters == U("1"));
  CHECK_FALSE(smooth.infinity_is_singular);
  CHECK(count_singular_fibers(smooth) == 0);
  CHECK(code_of([] { (void)singular_fiber_locus(F("y^2 - x^3")); }) ==
        ErrorCode::degenerate_family);
}

TEST_CASE("count_singular_fibers examples") {
  CHECK(count_singular_fibers({U("t^2+1"), false}) == 2);
  CHECK(count_singular_fibers({U("1"), false}) == 0);
  CHECK(count_singular_fibers({U("t^2-t"), true}) == 3);
}

TEST_CASE("singular locus moves with reparametrisation t -> t + c") {
  const std::vector<std::string> families{kLegendre, kConicPencil,
                                          "x*y*(x+y-1) - t", "y^2 - x^3 - t*x - 1"};
  const std::vector<Rational> shifts{1, -2, make_rational(1, 3), make_rational(-5, 2)};
  for (const auto& text : families) {
    const QPoly f = F(text);
    const auto base = singular_fiber_locus(f);
    for (const auto& c : shifts) {
      const QPoly shifted = f.substitute(2, F("t") + f.constant_like(c));
      const auto moved = singular_fiber_locus(shifted);
      // Roots move by -c: the new locus is p(t + c) made monic.
      QUniPoly expected(RationalField{});
      const QUniPoly arg = U("t") + QUniPoly::constant(RationalField{}, c);
      for (int i = base.finite_parameters.degree(); i >= 0; --i)
        expected = expected * arg + QUniPoly::constant(RationalField{},
                                                       base.finite_parameters.coeff(i));
      CHECK(moved.finite_parameters == expected.monic());
      CHECK(moved.infinity_is_singular == base.infinity_is_singular);
    }
  }
}

TEST_CASE("singular fiber count is invariant under rescaling") {
  std::mt19937 rng(3);
  const std::vector<std::string> families{kLegendre, kQuarticFamily, kConicPencil};
  for (const auto& text : families) {
    const QPoly f = F(text);
    const unsigned s = count_singular_fibers(singular_fiber_locus(f));
    for (int i = 0; i < 4; ++i) {
      const Rational c = oracle::random_coeff(rng, true);
      CHECK(count_singular_fibers(singular_fiber_locus(f.scaled(c))) == s);
    }
  }
}

TEST_CASE("singular points of plane curves") {
  const auto nodal_cubic = singular_points(C("y^2*z - x^2*(x+z)"));
  CHECK(nodal_cubic.count == 1);
  CHECK(nodal_cubic.nodal);
  const auto triangle = singular_points(C("x*y*z"));
  CHECK(triangle.count == 3);
  CHECK(triangle.nodal);
  CHECK_FALSE(singular_points(C("y^3*z - x^4")).nodal);
  CHECK_FALSE(singular_points(C("x*z^3")).finite);
  CHECK(singular_points(C("x^2 + y^2 - z^2")).count == 0);
  // Two conics meeting transversally in four points.
  CHECK(singular_points(C("(x^2+y^2-z^2)*(x^2+4*y^2-9*z^2)")).count == 4);
}

TEST_CASE("rational components of single fibers") {
  CHECK(fiber_rational_components(C("y^2*z - x^2*(x+z)")) == 1);
  CHECK(fiber_rational_components(C("x*y*z")) == 3);
  CHECK(fiber_rational_components(C("(x-y)*(x+y-z)*(2*x-3*y+z)")) == 3);
  CHECK(fiber_rational_components(C("(y-2*z)*(y^2*z - x^2*(x+z))")) == 2);
  CHECK(fiber_rational_components(C("(x+y+z)*(x^2+y^2-4*z^2)")) == 2);
  // Smooth fibers contribute nothing.
  CHECK(fiber_rational_components(C("x^2 + y^2 - z^2")) == 0);
  // Cremona transform of a conic: a quartic with three nodes, so genus 0.
  CHECK(fiber_rational_components(C("y^2*z^2 + 2*x^2*z^2 - 5*x^2*y^2 + x*y*z^2")) == 1);
  // Lines count whatever singularities they meet.
  CHECK(fiber_rational_components(C("y*(y-x)*(y+x)")) == 3);
  CHECK(fiber_rational_components(C("x*z*(x-z)")) == 3);
  // Smooth cubic plus a secant line: the cubic keeps genus 1.
  CHECK(fiber_rational_components(C("x*(y^2*z - x^3 + x*z^2 - z^3)")) == 1);
}

TEST_CASE("fibers routed to a user-supplied k") {
  // y^3 = x^4 at the origin is not a node.
  CHECK(code_of([] { (void)fiber_rational_components(C("y^3*z - x^4")); }) ==
        ErrorCode::unsupported);
  CHECK(code_of([] { (void)fiber_rational_components(C("(y-z)*(y^3*z - x^4)")); }) ==
        ErrorCode::unsupported);
  CHECK(code_of([] { (void)fiber_rational_components(C("x*z^3")); }) == ErrorCode::unsupported);
  // A pair of conjugate lines cannot be told apart from an irreducible
  // singular conic without factoring.
  CHECK(code_of([] { (void)fiber_rational_components(C("(x^2-2*y^2)*z")); }) ==
        ErrorCode::unsupported);
  CHECK(code_of([] {
          (void)fiber_rational_components(C("(x^2+y^2-z^2)*(x^2+4*y^2-9*z^2)"));
        }) == ErrorCode::unsupported);
}

TEST_CASE("rational components of whole families") {
  // Pencil x^2 + y^2 - z^2 + t x y: line pairs at t = 2, -2 and over infinity.
  const QPoly pencil = F(kConicPencil);
  const auto locus = singular_fiber_locus(pencil);
  CHECK(locus.finite_parameters == U("t^2 - 4"));
  CHECK(locus.infinity_is_singular);
  const auto k = rational_components(pencil, locus);
  CHECK(k.k == 6);
  CHECK(k.source == ValueSource::computed);

  // Legendre: nodal cubics over 0 and 1, three concurrent lines over infinity.
  const QPoly legendre = F(kLegendre);
  CHECK(rational_components(legendre, singular_fiber_locus(legendre)).k == 5);

  const QPoly quartic = F(kQuarticFamily);
  CHECK(code_of([&] { (void)rational_components(quartic, singular_fiber_locus(quartic)); }) ==
        ErrorCode::unsupported);
  CHECK(code_of([] { (void)rational_components(F(kLegendre), {U("t^2+1"), false}); }) ==
        ErrorCode::unsupported);
}

TEST_CASE("omega squared for bidegree families") {
  CHECK(omega_sq_bidegree(4, 1) == 9);
  CHECK(omega_sq_bidegree(4, 3) == 27);
  for (unsigned e = 0; e <= 8; ++e) CHECK(omega_sq_bidegree(3, e) == 0);
  for (unsigned d = 1; d <= 8; ++d) {
    for (unsigned e = 0; e <= 8; ++e) {
      // omega = (d-3) H1 + e H2 restricted to X = d H1 + e H2.
      const std::array<Integer, 2> omega{Integer(d) - 3, Integer(e)};
      const std::array<Integer, 2> surface{Integer(d), Integer(e)};
      CHECK(omega_sq_bidegree(d, e) == top_intersection(omega, omega, surface));
      if (e > 0) {
        CHECK(omega_sq_bidegree(d, 2 * e) == 2 * omega_sq_bidegree(d, e));
        CHECK((omega_sq_bidegree(d, e) == 0) == (d == 1 || d == 3));
      }
    }
  }
}

TEST_CASE("extract_invariants") {
  InvariantOverrides k_only;
  k_only.k = 5;
  const auto quartic = extract_invariants(F(kQuarticFamily), k_only);
  CHECK(quartic.d == 4);
  CHECK(quartic.e == 3);
  CHECK(quartic.g == 3);
  CHECK(quartic.s == 2);
  CHECK(quartic.s_source == ValueSource::computed);
  CHECK(quartic.k == 5);
  CHECK(quartic.k_source == ValueSource::user_supplied);
  CHECK(quartic.omega_sq == Rational(27));
  CHECK(quartic.usable_for_height_bound());

  const auto line = extract_invariants(F("x + y - t"));
  CHECK(line.d == 1);
  CHECK(line.e == 1);
  CHECK(line.g == 0);
  CHECK(line.genus_below_two());
  CHECK_FALSE(line.usable_for_height_bound());

  const auto bidegree = extract_invariants(F("x^4 + y^4 - 1 + t*x*y*(x+y)"), {3, 13});
  CHECK(bidegree.omega_sq == Rational(9));
  CHECK_FALSE(bidegree.locus.has_value());

  const auto pencil = extract_invariants(F(kConicPencil));
  CHECK(pencil.s == 3);
  CHECK(pencil.k == 6);

  CHECK(code_of([] { (void)extract_invariants(F(kQuarticFamily)); }) == ErrorCode::unsupported);
}
