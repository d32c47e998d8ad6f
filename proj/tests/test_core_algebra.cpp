#include <doctest.h>

#include <random>

#include "dioph/elimination.hpp"
#include "dioph/parse.hpp"
#include "dioph/unipoly.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

QPoly P(std::string_view s, std::vector<std::string> vars = {"x", "y", "t"}) {
  return parse_qpoly(s, vars);
}

QUniPoly U(std::string_view s) { return QUniPoly::from_poly(P(s, {"t"}), 0); }

}  // namespace

TEST_CASE("rationals stay canonical") {
  Rational a = make_rational(6, -4);
  CHECK(a.get_num() == -3);
  CHECK(a.get_den() == 2);
  CHECK(parse_rational("0/7") == 0);
  CHECK(parse_rational("0/7").get_den() == 1);
  CHECK(parse_rational("-20760/1727") == make_rational(-20760, 1727));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  Rational s = a + make_rational(1, 2);
  CHECK(s == -1);
  CHECK(s.get_den() == 1);
}

TEST_CASE("prime field arithmetic") {
  PrimeField f7(7);
  Fp a = f7.from_integer(-1);
  CHECK(a.residue() == 6);
  CHECK((a * a).residue() == 1);
  CHECK((f7.one() / Fp(3, 7)).residue() == 5);
  CHECK(f7.from_rational(make_rational(1, 2)).residue() == 4);
  CHECK_THROWS_AS(PrimeField(12), Error);
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 11), Error);
  CHECK_THROWS_AS(f7.from_rational(make_rational(1, 7)), Error);
  // Largest 64-bit prime still multiplies exactly.
  PrimeField big(18446744073709551557ull);
  Fp m = big.from_integer(-1);
  CHECK((m * m).residue() == 1);
}

TEST_CASE("integer helpers") {
  CHECK(is_prime(2));
  CHECK(is_prime(1000000007));
  CHECK_FALSE(is_prime(1729));
  CHECK(isqrt(Integer(2305)) == 48);
  auto f = factor_integer(Integer(1729));
  REQUIRE(f.size() == 3);
  CHECK(f[0].first == 7);
  CHECK(f[2].first == 19);
  CHECK(positive_divisors(Integer(12)).size() == 6);
  // Semiprime beyond trial division.
  auto g = factor_integer(Integer("1000000016000000063"));
  REQUIRE(g.size() == 2);
  CHECK(g[0].first * g[1].first == Integer("1000000016000000063"));
}

TEST_CASE("poly_arith examples") {
  CHECK(P("(x+y)*(x^2-x*y+y^2)") == P("x^3+y^3"));
  QPoly f = P("y^3 - x^4 + 6*t*x^3");
  CHECK(f + f.zero_like() == f);
  CHECK(P("(t+1)*(t-1)") == P("t^2-1"));
  QPoly other(RationalField{}, {"x", "y"});
  CHECK_THROWS_AS(f + other, Error);
  FpPoly a = parse_poly("x+1", {"x"}, PrimeField(5)).poly;
  FpPoly b = parse_poly("x+1", {"x"}, PrimeField(7)).poly;
  try {
    (void)(a * b);
    FAIL("expected domain mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain_mismatch);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = oracle::random_poly(rng, 3, 3, 4);
    auto b = oracle::random_poly(rng, 3, 3, 4);
    auto c = oracle::random_poly(rng, 3, 3, 4);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("exact division") {
  QPoly f = P("(x+y-t)*(x^2+t^3-1/2)");
  CHECK(f.exact_divide(P("x+y-t")) == P("x^2+t^3-1/2"));
  CHECK_THROWS_AS(f.exact_divide(P("x+1")), Error);
}

TEST_CASE("uni_gcd examples") {
  CHECK(uni_gcd(U("t^2-1"), U("t^2-2*t+1")) == U("t-1"));
  CHECK(uni_gcd(U("3*t^2+3"), QUniPoly(RationalField{})) == U("t^2+1"));
  CHECK(uni_gcd(U("t^3-t"), U("t^2")) == U("t"));
  CHECK_THROWS_AS(uni_gcd(QUniPoly(RationalField{}), QUniPoly(RationalField{})), Error);
}

TEST_CASE("uni_gcd divides and is greatest on random products") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    QUniPoly common = oracle::random_unipoly(rng, 2);
    QUniPoly a = common * oracle::random_unipoly(rng, 3);
    QUniPoly b = common * oracle::random_unipoly(rng, 2);
    if (a.is_zero() || b.is_zero()) continue;
    QUniPoly g = uni_gcd(a, b);
    CHECK(a.divmod(g).second.is_zero());
    CHECK(b.divmod(g).second.is_zero());
    if (!common.is_zero()) CHECK(g.divmod(common.monic()).second.is_zero());
  }
}

TEST_CASE("uni_gcd over F_p") {
  PrimeField f3(3);
  auto u = [&](std::string_view s) {
    return FpUniPoly::from_poly(parse_poly(s, {"t"}, f3).poly, 0);
  };
  CHECK(uni_gcd(u("t^3-t"), u("t^2+2*t+1")) == u("t+1"));
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(U("t^2*(t-1)^2")) == U("t*(t-1)"));
  CHECK(squarefree_part(U("t^2+1")) == U("t^2+1"));
  CHECK(squarefree_part(U("(t-2)^3")) == U("t-2"));
  CHECK(squarefree_part(U("5")) == U("1"));
  CHECK_THROWS_AS(squarefree_part(QUniPoly(RationalField{})), Error);
}

TEST_CASE("squarefree_part has nonzero discriminant and divides the input") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    QUniPoly a = oracle::random_unipoly(rng, 2);
    QUniPoly b = oracle::random_unipoly(rng, 2);
    QUniPoly f = a * a * b;
    if (f.degree() < 1) continue;
    QUniPoly s = squarefree_part(f);
    CHECK(f.divmod(s).second.is_zero());
    if (s.degree() >= 1) {
      QPoly sp = s.to_poly({"t"}, 0);
      CHECK_FALSE(discriminant(sp, 0).is_zero());
    }
  }
}

TEST_CASE("rational_roots examples") {
  auto roots = rational_roots(QUniPoly::from_poly(P("y^4-y", {"y"}), 0));
  CHECK(roots == std::vector<Rational>{0, 1});
  CHECK(rational_roots(U("t^2+1")).empty());
  CHECK(rational_roots(U("2*t-3")) == std::vector<Rational>{make_rational(3, 2)});
  CHECK(rational_roots(U("(6*t+20760)*(1727*t-3457)*(t^2+2)")) ==
        std::vector<Rational>{-3460, make_rational(3457, 1727)});
  CHECK_THROWS_AS(rational_roots(QUniPoly(RationalField{})), Error);
}

TEST_CASE("resultant examples") {
  CHECK(resultant(P("x^2-3*x+2"), P("x-1"), 0).is_zero());
  CHECK(resultant(P("x^2-1"), P("2*x"), 0) == P("-4"));
  // Rows of the first argument come first: Res_x(x - t, x - 1) = t - 1.
  CHECK(resultant(P("x-t"), P("x-1"), 0) == P("t-1"));
  CHECK_THROWS_AS(resultant(P("x"), P("0"), 0), Error);
}

TEST_CASE("discriminant examples") {
  std::vector<std::string> v{"x", "b", "c"};
  CHECK(discriminant(P("x^2-1", v), 0) == P("4", v));
  CHECK(discriminant(P("x^2", v), 0).is_zero());
  CHECK(discriminant(P("x^2+b*x+c", v), 0) == P("b^2-4*c", v));
  CHECK(discriminant(P("x^3+b*x+c", v), 0) == P("-4*b^3-27*c^2", v));
  CHECK_THROWS_AS(discriminant(P("b+c", v), 0), Error);
}

TEST_CASE("resultant agrees with Laplace expansion of the Sylvester matrix") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    auto [a, b] = oracle::random_pair_in_x(rng, 4, trial % 3 == 0);
    auto expected = oracle::laplace_determinant(oracle::naive_sylvester(a, b, 0), a);
    CHECK(resultant(a, b, 0) == expected);
  }
}

TEST_CASE("parser round trip on random polynomials") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    QPoly p = oracle::random_poly(rng, 3, 4, 6, /*fractions=*/true);
    CHECK(P(p.to_string()) == p);
  }
}

TEST_CASE("parser examples and errors") {
  QPoly f = P("y^3 - x^4 + 6*t*x^3 - 11*t^2*x^2 + 6*t^3*x");
  CHECK(f.num_terms() == 5);
  CHECK(f.coefficient({1, 0, 3}) == 6);
  CHECK(P("x^3 + y^3 - 1729").constant_term() == -1729);
  try {
    (void)P("x + + y");
    FAIL("expected syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(P("2x"), SyntaxError);
  CHECK_THROWS_AS(P("x^"), SyntaxError);
  CHECK_THROWS_AS(P("(x+1"), SyntaxError);
  try {
    (void)P("x + z");
    FAIL("expected unknown variable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_variable);
  }
  CHECK_THROWS_AS(parse_poly("x", {"x"}, PrimeField(9)), Error);
  CHECK(parse_poly("1/2*x", {"x"}, PrimeField(5)).poly.coefficient({1}).residue() == 3);
}
