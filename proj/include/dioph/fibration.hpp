#pragma once

#include <optional>
#include <utility>

#include "dioph/groebner.hpp"
#include "dioph/poly.hpp"
#include "dioph/unipoly.hpp"

// A polynomial f(x, y, t) read as a family of plane curves over the t-line.
// Fibers are studied on their projective closure in P^2 with coordinates
// (x : y : z); family polynomials live in the ring (x, y, t) and projective
// fibers in the ring (x, y, z).

namespace dioph {

/// Singular fibers: the finite ones are the roots of finite_parameters (monic,
/// squarefree), plus the fiber over t = infinity when flagged.
struct SingularFiberLocus {
  QUniPoly finite_parameters{RationalField{}};
  bool infinity_is_singular = false;
};

enum class ValueSource { computed, user_supplied };

struct ComponentCount {
  unsigned k = 0;
  ValueSource source = ValueSource::computed;
};

struct InvariantOverrides {
  std::optional<unsigned> k;
  std::optional<unsigned> s;
};

struct FamilyInvariants {
  unsigned d = 0;
  unsigned e = 0;
  unsigned g = 0;
  unsigned s = 0;
  unsigned k = 0;
  ValueSource s_source = ValueSource::computed;
  ValueSource k_source = ValueSource::computed;
  /// omega^2 = 3e(d-1)(d-3), valid when the family is a smooth surface of
  /// bidegree (d, e) in P^2 x P^1.
  std::optional<Rational> omega_sq;
  /// Present when s or k had to be computed.
  std::optional<SingularFiberLocus> locus;

  /// The height bound needs d >= 4.
  bool usable_for_height_bound() const { return d >= 4; }
  bool genus_below_two() const { return g < 2; }
};

/// The ring names used for families and projective fibers.
const std::vector<std::string>& family_ring();
const std::vector<std::string>& plane_ring();

/// (d, e): joint degree in (x, y) and degree in t. f may use any subset of the
/// family ring variables.
std::pair<unsigned, unsigned> degrees(const QPoly& f);

/// (d-1)(d-2)/2, the genus of a smooth plane curve of degree d.
unsigned generic_genus(unsigned d);

/// F(x, y, z, t) homogeneous of degree d in (x, y, z) with F(x, y, 1, t) = f.
QPoly homogenize(const QPoly& f);

/// The projective fiber over t = t0, in the plane ring.
QPoly fiber_at(const QPoly& f, const Rational& t0);
/// The fiber over t = infinity: the top t-coefficient of the homogenization.
QPoly fiber_at_infinity(const QPoly& f);

SingularFiberLocus singular_fiber_locus(const QPoly& f, const GroebnerOptions& options = {});

unsigned count_singular_fibers(const SingularFiberLocus& locus);

/// Singular points over C of a projective plane curve (plane ring,
/// homogeneous).
struct SingularPoints {
  /// False when the curve is non-reduced (a whole component is singular).
  bool finite = true;
  std::size_t count = 0;
  /// Every singular point is an ordinary double point.
  bool nodal = true;
};
SingularPoints singular_points(const QPoly& curve, const GroebnerOptions& options = {});

/// Rational components of one projective fiber: its lines over Q, plus the
/// residual curve when that is certifiably irreducible and of geometric genus
/// 0. A smooth fiber contributes nothing.
unsigned fiber_rational_components(const QPoly& curve, const GroebnerOptions& options = {});

/// Sum of fiber_rational_components over every singular fiber, the fiber at
/// infinity included. Distinct components are counted once.
ComponentCount rational_components(const QPoly& f, const SingularFiberLocus& locus,
                                   const GroebnerOptions& options = {});

Integer omega_sq_bidegree(unsigned d, unsigned e);

FamilyInvariants extract_invariants(const QPoly& f, const InvariantOverrides& overrides = {},
                                    const GroebnerOptions& options = {});

}  // namespace dioph
