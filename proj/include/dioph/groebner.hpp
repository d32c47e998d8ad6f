#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dioph/poly.hpp"
#include "dioph/unipoly.hpp"

namespace dioph {

enum class OrderKind { lex, degrevlex };

/// Monomial order on a ring with nvars variables. The precedence list names
/// ring variable indices from most to least significant.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

  /// Ring order: variable 0 highest.
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder degrevlex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Exponents& a, const Exponents& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

struct GroebnerOptions {
  /// Abort with resource_limit after this many S-pair reductions.
  std::size_t max_steps = 200000;
  /// Abort with resource_limit once this instant has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct IdealBasis {
  std::vector<QPoly> generators;
  MonomialOrder order;
  bool is_groebner = false;

  bool is_unit() const;
  bool is_zero_ideal() const { return generators.empty(); }
};

Exponents leading_monomial(const QPoly& f, const MonomialOrder& order);
Rational leading_coefficient(const QPoly& f, const MonomialOrder& order);

QPoly s_polynomial(const QPoly& f, const QPoly& g, const MonomialOrder& order);

/// Full normal form of f modulo the basis generators (tried in order).
QPoly reduce(const QPoly& f, const IdealBasis& basis);

/// Reduced Groebner basis: monic, minimal, inter-reduced, sorted by
/// descending leading monomial.
IdealBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& order,
                      const GroebnerOptions& options = {});

/// Generators free of every variable outside keep. Requires a lex basis in
/// which all eliminated variables outrank all kept ones.
IdealBasis eliminate(const IdealBasis& basis, std::span<const std::size_t> keep);

/// Zero-dimensionality restricted to the given variables: each has a pure
/// power among the leading monomials.
bool is_zero_dimensional(const IdealBasis& basis, std::span<const std::size_t> vars);
bool is_zero_dimensional(const IdealBasis& basis);

/// Number of standard monomials (vector-space dimension of the quotient) of a
/// zero-dimensional Groebner basis. Counts points with multiplicity.
std::size_t quotient_dimension(const IdealBasis& basis);

/// Monic generator of I ∩ Q[var] for a zero-dimensional Groebner basis, found
/// by linear dependence among normal forms of var^k.
QUniPoly minimal_polynomial(const IdealBasis& basis, std::size_t var);

/// Groebner basis of the radical of a zero-dimensional ideal (adjoins the
/// squarefree parts of every variable's minimal polynomial).
IdealBasis zero_dimensional_radical(const IdealBasis& basis, const GroebnerOptions& options = {});

struct RationalSolutions {
  /// Points in ring-variable order, sorted lexicographically.
  std::vector<std::vector<Rational>> points;
  /// Roots of the per-variable eliminants that are not rational.
  std::size_t unresolved_branches = 0;
};

/// Every solution with all coordinates rational of a zero-dimensional system.
/// Triangular back-substitution: the last variable's eliminant is solved over
/// Q, its roots substituted, and the rest solved recursively.
RationalSolutions solve_rational(const std::vector<QPoly>& system,
                                 const GroebnerOptions& options = {});

}  // namespace dioph
