#include "dioph/bounds.hpp"

namespace dioph {

namespace {

BoundReport start(BoundKind kind, std::vector<std::pair<std::string, Rational>> inputs) {
  BoundReport r;
  r.kind = kind;
  r.inputs = std::move(inputs);
  return r;
}

void note(BoundReport& r, std::string name, bool asserted, bool hard = false) {
  if (!asserted && !hard)
    r.caveats.push_back("'" + name + "' not asserted; the bound is conditional on it");
  r.assumptions.push_back({std::move(name), asserted, hard});
}

void refuse(BoundReport& r, std::string reason) {
  r.value.reset();
  r.inapplicable_reason = std::move(reason);
}

void check_point(const PointData& p) {
  if (p.cover_degree < 1) throw Error(ErrorCode::invalid_argument, "cover degree must be at least 1");
}

std::vector<std::pair<std::string, Rational>> point_inputs(const PointData& p) {
  return {{"h", p.height}, {"dP", p.discriminant}, {"cover_degree", Rational(p.cover_degree)}};
}

}  // namespace

PointData PointData::section(Rational height) { return {std::move(height), Rational(-2), 1}; }

PointData PointData::on_cover(Rational height, unsigned cover_genus, unsigned cover_degree) {
  if (cover_degree < 1) throw Error(ErrorCode::invalid_argument, "cover degree must be at least 1");
  return {std::move(height),
          make_rational(2 * Integer(cover_genus) - 2, cover_degree), cover_degree};
}

std::string_view bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::tan_plane: return "tan-plane";
    case BoundKind::tan_general: return "tan-general";
    case BoundKind::moriwaki: return "moriwaki";
    case BoundKind::vojta: return "vojta";
    case BoundKind::char_p: return "char-p";
    case BoundKind::inseparable: return "inseparable";
  }
  return "unknown";
}

BoundReport tan_plane_bound(unsigned d, unsigned s, unsigned k, const Assumptions& assumed) {
  BoundReport r = start(BoundKind::tan_plane, {{"d", d}, {"s", s}, {"k", k}});
  note(r, "minimal", assumed.minimal);
  if (d < 4) {
    refuse(r, "the (x,y)-degree d must be at least 4");
    return r;
  }
  const Rational dd(d);
  const Rational value = ((dd * dd - 3 * dd + 1) * (Rational(s) - 1) + k) / (dd - 3);
  r.value = value;
  return r;
}

BoundReport tan_plane_bound(const FamilyInvariants& inv, const Assumptions& assumed) {
  BoundReport r = tan_plane_bound(inv.d, inv.s, inv.k, assumed);
  r.inputs.push_back({"e", inv.e});
  r.inputs.push_back({"g", inv.g});
  if (inv.s_source == ValueSource::computed)
    r.caveats.push_back("s counts the fiber over t = infinity when it is singular");
  if (inv.k_source == ValueSource::computed)
    r.caveats.push_back("k counts distinct rational components once each");
  return r;
}

BoundReport tan_general_bound(unsigned g, const PointData& point, unsigned s,
                              const Rational& omega_sq, const Assumptions& assumed) {
  check_point(point);
  auto inputs = point_inputs(point);
  inputs.push_back({"g", g});
  inputs.push_back({"s", s});
  inputs.push_back({"omega2", omega_sq});
  BoundReport r = start(BoundKind::tan_general, std::move(inputs));
  note(r, "minimal", assumed.minimal);
  if (g < 2) {
    refuse(r, "the fiber genus g must be at least 2");
    return r;
  }
  r.value = Rational(2 * static_cast<long>(g) - 1) * (point.discriminant + 3 * Rational(s)) -
            omega_sq;
  if (sgn(*r.value) < 0) r.caveats.push_back("negative bound: no such point exists");
  return r;
}

BoundReport moriwaki_bound(const PointData& point, const Rational& c1_sq, const Rational& c2,
                           unsigned g_B, const Assumptions& assumed) {
  check_point(point);
  auto inputs = point_inputs(point);
  inputs.push_back({"c1sq", c1_sq});
  inputs.push_back({"c2", c2});
  inputs.push_back({"gB", g_B});
  BoundReport r = start(BoundKind::moriwaki, std::move(inputs));
  note(r, "ks-full-rank", assumed.ks_full_rank, /*hard=*/true);
  if (!assumed.ks_full_rank) {
    refuse(r, "needs the Kodaira-Spencer map to have full rank (assert ks-full-rank)");
    return r;
  }
  r.value = 4 * point.discriminant + 4 * c2 - c1_sq - 4 * (Rational(g_B) - 1);
  return r;
}

BoundReport vojta_bound(const PointData& point, const Rational& epsilon,
                        const Rational& big_o_constant) {
  check_point(point);
  if (sgn(epsilon) <= 0) throw Error(ErrorCode::invalid_argument, "epsilon must be positive");
  auto inputs = point_inputs(point);
  inputs.push_back({"epsilon", epsilon});
  inputs.push_back({"big_o", big_o_constant});
  BoundReport r = start(BoundKind::vojta, std::move(inputs));
  r.value = (2 + epsilon) * point.discriminant + big_o_constant;
  r.caveats.push_back("the O(1) constant is user-supplied");
  return r;
}

BoundReport char_p_bound(const PointData& point, unsigned g, std::uint64_t p, unsigned e_insep,
                         const Assumptions& assumed) {
  check_point(point);
  if (!is_prime(p)) throw Error(ErrorCode::invalid_argument, "p must be prime");
  auto inputs = point_inputs(point);
  inputs.push_back({"g", g});
  inputs.push_back({"p", Rational(Integer(std::to_string(p)))});
  inputs.push_back({"e", e_insep});
  BoundReport r = start(BoundKind::char_p, std::move(inputs));
  note(r, "non-isotrivial", assumed.non_isotrivial);
  Integer pe;
  mpz_ui_pow_ui(pe.get_mpz_t(), p, e_insep);
  r.value = Rational(pe) * (2 * Rational(g) - 2) * point.discriminant;
  r.caveats.push_back("leading term only: the O(sqrt(h)) term is omitted, the bound is asymptotic");
  r.caveats.push_back("d(p) and h(p) are read as d(P) and h(P) of the same point");
  return r;
}

BoundReport inseparable_bound(unsigned g_B, unsigned s, const Assumptions& assumed) {
  BoundReport r = start(BoundKind::inseparable, {{"gB", g_B}, {"s", s}});
  note(r, "semistable", assumed.semistable);
  note(r, "non-isotrivial", assumed.non_isotrivial);
  r.value = 2 * Rational(g_B) - 2 + s;
  return r;
}

Integer cubesum_coordinate_bound(const Integer& m) {
  if (m == 0)
    throw Error(ErrorCode::invalid_argument,
                "m = 0 has the infinitely many solutions x = -y; no coordinate bound");
  Integer q = 4 * abs(m) / 3;
  return isqrt(q);
}

long search_degree(const BoundReport& report) {
  if (!report.value || sgn(*report.value) < 0) return -1;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), report.value->get_num_mpz_t(), report.value->get_den_mpz_t());
  return f.get_si();
}

}  // namespace dioph
