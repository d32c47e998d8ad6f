#include <doctest.h>

#include <random>

#include "dioph/geography.hpp"
#include "oracles.hpp"

using namespace dioph;

namespace {

SurfaceNumbers family(unsigned g, unsigned g_B, Rational omega_sq, Rational delta) {
  SurfaceNumbers n;
  n.g = g;
  n.g_B = g_B;
  n.omega_sq = std::move(omega_sq);
  n.delta = std::move(delta);
  return n;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-60, 60), den(1, 9);
  return make_rational(num(rng), den(rng));
}

bool margin_agrees(const CheckResult& r) {
  return r.comparison == Comparison::equal ? r.holds == (sgn(r.margin) == 0)
                                           : r.holds == (sgn(r.margin) >= 0);
}

}  // namespace

TEST_CASE("surface_from_family examples") {
  auto a = surface_from_family(family(2, 2, 4, 10));
  CHECK(*a.c1_sq == 12);
  CHECK(*a.c2 == 14);
  auto b = surface_from_family(family(2, 1, 4, 8));
  CHECK(*b.c1_sq == 4);
  CHECK(*b.c2 == 8);
  for (unsigned g = 0; g < 6; ++g) {
    auto c = surface_from_family(family(g, 1, 0, 0));
    CHECK(*c.c1_sq == 0);
    CHECK(*c.c2 == 0);
  }
  SurfaceNumbers missing;
  missing.g = 2;
  CHECK_THROWS_AS(surface_from_family(missing), Error);
  auto clash = family(2, 2, 4, 10);
  clash.c2 = 1;
  CHECK_THROWS_AS(surface_from_family(clash), Error);
}

TEST_CASE("check_noether_formula examples") {
  SurfaceNumbers n;
  n.lambda = 1;
  n.omega_sq = 9;
  n.delta = 3;
  CHECK(check_noether_formula(n).holds);
  n.delta = 4;
  const auto off = check_noether_formula(n);
  CHECK_FALSE(off.holds);
  CHECK(off.margin == 1);  // rhs - lhs = 13 - 12
  CHECK(off.lhs - off.rhs == -1);
  SurfaceNumbers zero;
  zero.lambda = 0;
  zero.omega_sq = 0;
  zero.delta = 0;
  CHECK(check_noether_formula(zero).holds);
  SurfaceNumbers missing;
  missing.lambda = 1;
  CHECK_THROWS_AS(check_noether_formula(missing), Error);
}

TEST_CASE("the two Noether statements agree") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<unsigned> genus(0, 6);
  for (int trial = 0; trial < 500; ++trial) {
    SurfaceNumbers n = family(genus(rng), genus(rng), random_rational(rng), random_rational(rng));
    // Half the time construct lambda so that the formula holds.
    n.lambda = (trial % 2 == 0) ? (*n.omega_sq + *n.delta) / 12 : random_rational(rng);
    const bool expected = 12 * *n.lambda == *n.omega_sq + *n.delta;
    CHECK(check_noether_formula(n).holds == expected);
    CHECK(check_noether_surface(n).holds == expected);
    CHECK(check_noether_formula(surface_from_family(n)).holds == expected);
  }
}

TEST_CASE("check_chx examples") {
  const auto a = check_chx(family(2, 0, 2, 6), true);
  CHECK(a.holds);
  CHECK(a.lhs == 3);
  CHECK(a.rhs == 5);
  CHECK(a.applicable());
  const auto b = check_chx(family(2, 0, 0, 0));
  CHECK(b.holds);
  CHECK(b.margin == 0);
  CHECK_FALSE(b.applicable());  // stability not asserted
  CHECK_FALSE(check_chx(family(2, 0, 2, 20)).holds);
  CHECK_THROWS_AS(check_chx(family(1, 0, 2, 6)), Error);
}

TEST_CASE("check_my_family examples and boundary") {
  const auto a = check_my_family(family(2, 2, 4, 10));
  CHECK(a.holds);
  CHECK(a.rhs == 34);
  const auto b = check_my_family(family(2, 2, 4, 0));
  CHECK(b.holds);
  CHECK(b.margin == 0);
  CHECK_FALSE(check_my_family(family(2, 2, 40, 1)).holds);
  const auto low = check_my_family(family(2, 1, 4, 0));
  CHECK_FALSE(low.applicable());
  std::mt19937 rng(8);
  std::uniform_int_distribution<unsigned> genus(2, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned g = genus(rng), g_B = genus(rng);
    const Rational delta = random_rational(rng);
    const Rational boundary = (2 * Rational(g) - 2) * (2 * Rational(g_B) - 2) + 3 * delta;
    const Rational w = (trial % 2) ? boundary : random_rational(rng);
    const auto r = check_my_family(family(g, g_B, w, delta));
    CHECK((sgn(r.margin) == 0) == (w == boundary));
    CHECK(margin_agrees(r));
  }
}

TEST_CASE("check_noether_inequality_family examples") {
  const auto a = check_noether_inequality_family(family(2, 2, 4, 10));
  CHECK(a.holds);
  CHECK(a.rhs == 92);
  const auto b = check_noether_inequality_family(family(2, 1, 0, 36));
  CHECK(b.holds);
  CHECK(b.margin == 0);
  CHECK_FALSE(b.applicable());
  CHECK_FALSE(check_noether_inequality_family(family(2, 2, 1, 1000)).holds);
}

TEST_CASE("check_ehm examples") {
  const auto a = check_ehm(family(3, 0, 4, 4), 0);
  CHECK(a.holds);
  CHECK(a.margin == 0);
  CHECK_FALSE(a.caveats.empty());
  CHECK(check_ehm(family(3, 0, 4, 5), q(1, 4)).holds);
  CHECK_FALSE(check_ehm(family(3, 0, 4, 6), 0).holds);
}

TEST_CASE("check_surface_geography examples") {
  // The projective plane.
  const auto plane = check_surface_geography(9, 3);
  REQUIRE(plane.size() == kGeographyRules);
  for (const auto& r : plane) CHECK(r.holds);
  CHECK(plane[0].margin == 0);
  CHECK(plane[4].rhs == 75);  // 5*9 + 30, odd c1^2
  // K3.
  const auto k3 = check_surface_geography(0, 24);
  CHECK(k3[0].holds);
  CHECK(k3[1].holds);
  CHECK_FALSE(k3[2].holds);
  CHECK(k3[3].holds);
  CHECK(k3[4].rhs == 36);
  CHECK_FALSE(check_surface_geography(1, 1)[1].holds);
  CHECK(check_surface_geography(-1, -11)[1].holds);
  for (std::size_t i = 0; i < kGeographyRules; ++i) CHECK(plane[i].rule == kGeographyRuleIds[i]);
}

TEST_CASE("log Miyaoka-Yau identity") {
  const auto a = log_my_identity(3, 0, 5, 9, 0);
  CHECK(a.c2_log == 15);
  CHECK(a.statement_bound == 56);
  CHECK(a.derivation_bound == 6);
  CHECK(a.discrepancy == 50);
  CHECK(a.identity_holds);
  const auto b = log_my_identity(2, 0, 0, 0, 0);
  CHECK(b.c2_log == -6);
  CHECK(b.identity_holds);
  const auto c = log_my_identity(2, 1, 3, 1, 2);
  CHECK(c.c2_log == 9);
  CHECK(c.c1_sq_log == 21);
  CHECK(c.tan_bound_rhs == 9);
  CHECK_THROWS_AS(log_my_identity(1, 0, 3, 1, 2), Error);

  std::mt19937 rng(1000);
  std::uniform_int_distribution<unsigned> genus(2, 9), small(0, 9);
  for (int trial = 0; trial < 1000; ++trial) {
    const unsigned g = genus(rng), g_B = small(rng), s = small(rng);
    const Rational w = random_rational(rng), wp = random_rational(rng);
    const auto r = log_my_identity(g, g_B, s, w, wp);
    CHECK(r.identity_holds);
    CHECK(r.my_holds == (w + wp <= (2 * Rational(g) - 1) * (2 * Rational(g_B) - 2 + s)));
    CHECK(r.discrepancy == 2 * Rational(s) * (2 * Rational(g) - 1));
  }
}

TEST_CASE("adjunction_height examples") {
  CHECK(adjunction_height(5).p_sq == -5);
  CHECK(adjunction_height(5).contribution == 5);
  CHECK(adjunction_height(0).p_sq == 0);
  CHECK(adjunction_height(-2).p_sq == 2);
  CHECK(adjunction_height(-2).contribution == -2);
}

TEST_CASE("geography_region") {
  const auto grid = geography_region({1, 3}, {1, 3});
  CHECK(grid.size() == 9);
  CHECK(grid.front().c1_sq == 1);
  CHECK(grid.front().c2 == 1);
  CHECK(grid.back().c1_sq == 3);
  CHECK(grid.back().c2 == 3);
  const auto single = geography_region({9, 9}, {3, 3});
  REQUIRE(single.size() == 1);
  for (bool h : single[0].holds) CHECK(h);
  CHECK(geography_region({1, 0}, {1, 3}).empty());
  CHECK(geography_region({1, 3}, {5, 4}).empty());
  CHECK(geography_region({-20, 40}, {-10, 90}) == geography_region_serial({-20, 40}, {-10, 90}));
}

TEST_CASE("margins always agree with holds") {
  for (const auto& row : geography_region_serial({-5, 12}, {-5, 40})) {
    const auto checks = check_surface_geography(row.c1_sq, row.c2);
    for (std::size_t i = 0; i < kGeographyRules; ++i) {
      CHECK(margin_agrees(checks[i]));
      CHECK(checks[i].holds == row.holds[i]);
    }
  }
}
