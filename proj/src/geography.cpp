#include "dioph/geography.hpp"

namespace dioph {

const std::array<const char*, kGeographyRules> kGeographyRuleIds{
    "miyaoka-yau", "mod-12", "c1sq-positive", "c2-positive", "noether-line"};

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* name) {
  if (!v) throw Error(ErrorCode::invalid_argument, std::string("missing surface number '") + name + "'");
  return *v;
}

CheckResult compare(std::string rule, Rational lhs, Rational rhs,
                    Comparison how = Comparison::at_most) {
  CheckResult r;
  r.rule = std::move(rule);
  r.comparison = how;
  r.margin = rhs - lhs;
  r.holds = how == Comparison::equal ? sgn(r.margin) == 0 : sgn(r.margin) >= 0;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

// (2g-2)(2g_B-2) = omega . f^*K_B.
Rational fiber_base_term(unsigned g, unsigned g_B) {
  return (2 * Rational(g) - 2) * (2 * Rational(g_B) - 2);
}

void general_type_context(CheckResult& r, unsigned g, unsigned g_B) {
  r.preconditions.push_back({"g >= 2", g >= 2});
  r.preconditions.push_back({"g_B >= 2", g_B >= 2});
}

RegionRow region_row(std::int64_t c1, std::int64_t c2) {
  RegionRow row{c1, c2, {}};
  const auto checks = check_surface_geography(Integer(static_cast<long>(c1)), Integer(static_cast<long>(c2)));
  for (std::size_t i = 0; i < kGeographyRules; ++i) row.holds[i] = checks[i].holds;
  return row;
}

}  // namespace

bool CheckResult::applicable() const {
  for (const auto& p : preconditions)
    if (!p.satisfied) return false;
  return true;
}

SurfaceNumbers surface_from_family(const SurfaceNumbers& n) {
  const unsigned g = need(n.g, "g"), g_B = need(n.g_B, "g_B");
  const Rational& w = need(n.omega_sq, "omega_sq");
  const Rational& delta = need(n.delta, "delta");
  const Rational k = fiber_base_term(g, g_B);
  SurfaceNumbers out = n;
  const Rational c1 = w + 2 * k, c2 = k + delta;
  if ((n.c1_sq && *n.c1_sq != c1) || (n.c2 && *n.c2 != c2))
    throw Error(ErrorCode::invalid_argument,
                "given c1^2 or c2 disagree with the values implied by the family numbers");
  out.c1_sq = c1;
  out.c2 = c2;
  return out;
}

CheckResult check_noether_formula(const SurfaceNumbers& n) {
  return compare("noether-formula", 12 * need(n.lambda, "lambda"),
                 need(n.omega_sq, "omega_sq") + need(n.delta, "delta"), Comparison::equal);
}

CheckResult check_noether_surface(const SurfaceNumbers& n) {
  const SurfaceNumbers full = (n.c1_sq && n.c2) ? n : surface_from_family(n);
  const unsigned g = need(n.g, "g"), g_B = need(n.g_B, "g_B");
  const Rational chi =
      need(n.lambda, "lambda") + (Rational(g) - 1) * (Rational(g_B) - 1);
  return compare("noether-surface", *full.c1_sq + *full.c2, 12 * chi, Comparison::equal);
}

CheckResult check_chx(const SurfaceNumbers& n, bool stable_asserted) {
  const unsigned g = need(n.g, "g");
  if (g < 2) throw Error(ErrorCode::invalid_argument, "the C-H-X inequality needs g >= 2");
  const Rational inv_g(1, g);
  CheckResult r = compare("chx", (1 - inv_g) * need(n.delta, "delta"),
                          (2 + inv_g) * need(n.omega_sq, "omega_sq"));
  r.preconditions.push_back({"stable", stable_asserted});
  return r;
}

CheckResult check_my_family(const SurfaceNumbers& n) {
  const unsigned g = need(n.g, "g"), g_B = need(n.g_B, "g_B");
  CheckResult r = compare("my-family", need(n.omega_sq, "omega_sq"),
                          fiber_base_term(g, g_B) + 3 * need(n.delta, "delta"));
  general_type_context(r, g, g_B);
  return r;
}

CheckResult check_noether_inequality_family(const SurfaceNumbers& n) {
  const unsigned g = need(n.g, "g"), g_B = need(n.g_B, "g_B");
  CheckResult r = compare("noether-inequality", need(n.delta, "delta"),
                          5 * need(n.omega_sq, "omega_sq") + 9 * fiber_base_term(g, g_B) + 36);
  general_type_context(r, g, g_B);
  return r;
}

CheckResult check_ehm(const SurfaceNumbers& n, const Rational& o_term) {
  CheckResult r =
      compare("ehm", need(n.delta, "delta"), (1 + o_term) * need(n.omega_sq, "omega_sq"));
  r.caveats.push_back("generic-family hypothesis asserted; the o(1/g) term is user-supplied");
  return r;
}

std::vector<CheckResult> check_surface_geography(const Integer& c1_sq, const Integer& c2) {
  std::vector<CheckResult> out;
  out.push_back(compare("miyaoka-yau", Rational(c1_sq), Rational(3 * c2)));
  Integer residue;
  mpz_fdiv_r_ui(residue.get_mpz_t(), Integer(c1_sq + c2).get_mpz_t(), 12);
  out.push_back(compare("mod-12", Rational(residue), Rational(0), Comparison::equal));
  // Integers: c > 0 is 1 <= c.
  out.push_back(compare("c1sq-positive", Rational(1), Rational(c1_sq)));
  out.push_back(compare("c2-positive", Rational(1), Rational(c2)));
  const int offset = mpz_even_p(c1_sq.get_mpz_t()) ? 36 : 30;
  out.push_back(compare("noether-line", Rational(c2), Rational(5 * c1_sq + offset)));
  return out;
}

LogMiyaokaYau log_my_identity(unsigned g, unsigned g_B, unsigned s, const Rational& omega_sq,
                              const Rational& omega_dot_p) {
  if (g < 2) throw Error(ErrorCode::invalid_argument, "the log Miyaoka-Yau derivation needs g >= 2");
  LogMiyaokaYau r;
  const Rational two_g_minus_one = 2 * Rational(g) - 1;
  r.c2_log = two_g_minus_one * (2 * Rational(g_B) - 2 + s);
  r.c1_sq_log = omega_sq + omega_dot_p + 2 * r.c2_log;
  r.tan_bound_rhs = r.c2_log;
  r.identity_holds = r.c1_sq_log - 3 * r.c2_log == omega_sq + omega_dot_p - r.c2_log;
  r.my_holds = r.c1_sq_log <= 3 * r.c2_log;
  r.derivation_bound = r.c2_log - omega_sq;
  r.statement_bound = two_g_minus_one * (2 * Rational(g_B) - 2 + 3 * Rational(s)) - omega_sq;
  r.discrepancy = r.statement_bound - r.derivation_bound;
  return r;
}

AdjunctionHeight adjunction_height(const Rational& omega_dot_p) {
  return {-omega_dot_p, omega_dot_p};
}

std::vector<RegionRow> geography_region_serial(IntRange c1_sq, IntRange c2) {
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(c1_sq.size() * c2.size()));
  for (std::int64_t a = c1_sq.lo; a <= c1_sq.hi; ++a)
    for (std::int64_t b = c2.lo; b <= c2.hi; ++b) rows.push_back(region_row(a, b));
  return rows;
}

std::vector<RegionRow> geography_region(IntRange c1_sq, IntRange c2) {
  if (c1_sq.empty() || c2.empty()) return {};
  const std::int64_t width = c2.size();
  const std::int64_t total = c1_sq.size() * width;
  std::vector<RegionRow> rows(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < total; ++i)
    rows[static_cast<std::size_t>(i)] = region_row(c1_sq.lo + i / width, c2.lo + i % width);
  return rows;
}

}  // namespace dioph
