#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dioph/fibration.hpp"
#include "dioph/scalar.hpp"

namespace dioph {

/// An algebraic point P of the fibration, defined over a cover T -> B.
struct PointData {
  Rational height = 0;
  /// d(P) = (2 g_T - 2) / [T : B]; -2 for sections over the t-line.
  Rational discriminant = -2;
  unsigned cover_degree = 1;

  static PointData section(Rational height = 0);
  static PointData on_cover(Rational height, unsigned cover_genus, unsigned cover_degree);
};

/// Hypotheses the bounds rest on. None of them is checked; they are echoed in
/// every report.
struct Assumptions {
  bool minimal = false;
  bool ks_full_rank = false;
  bool semistable = false;
  bool non_isotrivial = false;
};

enum class BoundKind { tan_plane, tan_general, moriwaki, vojta, char_p, inseparable };

std::string_view bound_kind_name(BoundKind kind);

struct AssumptionStatus {
  std::string name;
  bool asserted = false;
  /// Without a hard assumption no value is reported.
  bool hard = false;
};

struct BoundReport {
  BoundKind kind{};
  std::vector<std::pair<std::string, Rational>> inputs;
  std::optional<Rational> value;
  std::vector<AssumptionStatus> assumptions;
  std::vector<std::string> caveats;
  /// Why value is absent.
  std::string inapplicable_reason;

  bool applicable() const { return value.has_value(); }
};

/// h <= ((d^2 - 3d + 1)(s - 1) + k) / (d - 3) for plane families of degree
/// d >= 4.
BoundReport tan_plane_bound(const FamilyInvariants& inv, const Assumptions& assumed = {});
BoundReport tan_plane_bound(unsigned d, unsigned s, unsigned k, const Assumptions& assumed = {});

/// h(P) <= (2g - 1)(d(P) + 3s) - omega^2 for genus g >= 2.
BoundReport tan_general_bound(unsigned g, const PointData& point, unsigned s,
                              const Rational& omega_sq, const Assumptions& assumed = {});

/// h(P) <= 4 d(P) + 4 c2 - c1^2 - 4(g_B - 1), only when the Kodaira-Spencer
/// map is asserted to have full rank.
BoundReport moriwaki_bound(const PointData& point, const Rational& c1_sq, const Rational& c2,
                           unsigned g_B, const Assumptions& assumed = {});

/// h(P) <= (2 + epsilon) d(P) + C with a user-supplied constant C.
BoundReport vojta_bound(const PointData& point, const Rational& epsilon,
                        const Rational& big_o_constant);

/// Leading term p^e (2g - 2) d(P) of the positive-characteristic bound.
BoundReport char_p_bound(const PointData& point, unsigned g, std::uint64_t p, unsigned e_insep,
                         const Assumptions& assumed = {});

/// h(P) <= 2 g_B - 2 + s for purely inseparable points.
BoundReport inseparable_bound(unsigned g_B, unsigned s, const Assumptions& assumed = {});

/// Largest B with 3 B^2 <= 4|m|: integer solutions of x^3 + y^3 = m have
/// |x|, |y| <= B.
Integer cubesum_coordinate_bound(const Integer& m);

/// Polynomial degree to search up to for a reported height bound: the floor
/// of the value, or -1 when the bound is negative or absent.
long search_degree(const BoundReport& report);

}  // namespace dioph
