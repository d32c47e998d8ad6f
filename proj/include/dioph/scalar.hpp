#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dioph/error.hpp"

namespace dioph {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "n" or "n/d" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Largest b with b*b <= n, n >= 0.
Integer isqrt(const Integer& n);

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
/// Trial division followed by Pollard-Brent rho on the remaining cofactor.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// All positive divisors of |n|, ascending.
std::vector<Integer> positive_divisors(const Integer& n);

/// Element of Z/pZ carrying its modulus. Arithmetic between elements of
/// different moduli throws domain_mismatch.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t residue, std::uint64_t modulus);

  std::uint64_t residue() const noexcept { return v_; }
  std::uint64_t modulus() const noexcept { return p_; }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  friend Fp operator-(const Fp& a) { return Fp(a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_); }
  Fp& operator+=(const Fp& b) { return *this = *this + b; }
  Fp& operator-=(const Fp& b) { return *this = *this - b; }
  Fp& operator*=(const Fp& b) { return *this = *this * b; }
  Fp& operator/=(const Fp& b) { return *this = *this / b; }

  friend bool operator==(const Fp& a, const Fp& b) = default;

 private:
  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.residue() == 0; }
std::string to_string(const Fp& a);

/// Field descriptor for Q. Polynomials are templated on a field descriptor so
/// that constants of the field can be produced without a sample element.
struct RationalField {
  using Element = Rational;

  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_integer(const Integer& n) const { return Rational(n); }
  Element from_rational(const Rational& q) const { return q; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) = default;
};

/// Field descriptor for F_p with a word-sized prime p.
class PrimeField {
 public:
  using Element = Fp;

  explicit PrimeField(std::uint64_t p);

  Element zero() const { return Fp(0, p_); }
  Element one() const { return Fp(1, p_); }
  Element from_integer(const Integer& n) const;
  /// Throws invalid_argument when the denominator vanishes mod p.
  Element from_rational(const Rational& q) const;
  std::uint64_t characteristic() const { return p_; }
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

}  // namespace dioph
