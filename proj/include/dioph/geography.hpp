#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dioph/scalar.hpp"

namespace dioph {

/// Numerical invariants of a fibration X -> B (family side) and of the
/// surface X itself (c1^2, c2). Unknown values stay empty.
struct SurfaceNumbers {
  std::optional<unsigned> g;
  std::optional<unsigned> g_B;
  std::optional<Rational> omega_sq;
  std::optional<Rational> delta;
  std::optional<Rational> lambda;
  std::optional<unsigned> s;
  std::optional<Rational> c1_sq;
  std::optional<Rational> c2;
};

enum class Comparison { at_most, equal };

struct Precondition {
  std::string name;
  bool satisfied = false;
};

struct CheckResult {
  std::string rule;
  Comparison comparison = Comparison::at_most;
  bool holds = false;
  Rational lhs;
  Rational rhs;
  /// rhs - lhs.
  Rational margin;
  std::vector<Precondition> preconditions;
  std::vector<std::string> caveats;

  bool applicable() const;
};

/// c1^2 = omega^2 + 2(2g-2)(2g_B-2), c2 = (2g-2)(2g_B-2) + delta.
SurfaceNumbers surface_from_family(const SurfaceNumbers& n);

/// 12 lambda = omega^2 + delta.
CheckResult check_noether_formula(const SurfaceNumbers& n);
/// c1^2 + c2 = 12 chi with chi = lambda + (g-1)(g_B-1); fills c1^2 and c2
/// from the family numbers when absent.
CheckResult check_noether_surface(const SurfaceNumbers& n);

/// (1 - 1/g) delta <= (2 + 1/g) omega^2 for stable families of genus g >= 2.
CheckResult check_chx(const SurfaceNumbers& n, bool stable_asserted = false);

/// omega^2 <= (2g-2)(2g_B-2) + 3 delta.
CheckResult check_my_family(const SurfaceNumbers& n);

/// delta <= 5 omega^2 + 9(2g-2)(2g_B-2) + 36.
CheckResult check_noether_inequality_family(const SurfaceNumbers& n);

/// delta <= (1 + o_term) omega^2 with a user-supplied o(1/g) value.
CheckResult check_ehm(const SurfaceNumbers& n, const Rational& o_term);

inline constexpr std::size_t kGeographyRules = 5;
extern const std::array<const char*, kGeographyRules> kGeographyRuleIds;

/// Miyaoka-Yau, the mod-12 congruence, positivity of c1^2 and of c2, and the
/// parity-dependent Noether line, in that order.
std::vector<CheckResult> check_surface_geography(const Integer& c1_sq, const Integer& c2);

struct LogMiyaokaYau {
  Rational c1_sq_log;
  Rational c2_log;
  /// (2g-1)(2g_B-2+s), the right-hand side the derivation bounds
  /// omega^2 + <omega.P> by.
  Rational tan_bound_rhs;
  /// c1_sq_log - 3 c2_log == omega^2 + <omega.P> - c2_log, checked exactly.
  bool identity_holds = false;
  /// c1_sq_log <= 3 c2_log.
  bool my_holds = false;
  /// Height bound from the derivation: c2_log - omega^2.
  Rational derivation_bound;
  /// The stated form (2g-1)(d(P) + 3s) - omega^2 for a section, d(P) = 2g_B - 2.
  Rational statement_bound;
  /// statement_bound - derivation_bound = 2s(2g-1): the two forms disagree on
  /// the coefficient of s.
  Rational discrepancy;
};

LogMiyaokaYau log_my_identity(unsigned g, unsigned g_B, unsigned s, const Rational& omega_sq,
                              const Rational& omega_dot_p);

struct AdjunctionHeight {
  /// P^2 = -<omega.P>.
  Rational p_sq;
  /// omega(P)^2 - omega^2 = 2<omega.P> + P^2 = <omega.P>.
  Rational contribution;
};

AdjunctionHeight adjunction_height(const Rational& omega_dot_p);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool empty() const { return hi < lo; }
  std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

struct RegionRow {
  std::int64_t c1_sq = 0;
  std::int64_t c2 = 0;
  std::array<bool, kGeographyRules> holds{};

  friend bool operator==(const RegionRow&, const RegionRow&) = default;
};

/// Row-major over c1_sq, then c2.
std::vector<RegionRow> geography_region(IntRange c1_sq, IntRange c2);
/// Single-threaded reference for geography_region.
std::vector<RegionRow> geography_region_serial(IntRange c1_sq, IntRange c2);

}  // namespace dioph
