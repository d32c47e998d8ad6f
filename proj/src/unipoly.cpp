#include "dioph/unipoly.hpp"

#include <set>

namespace dioph {

std::vector<Integer> primitive_integer_form(const QUniPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "primitive form of zero");
  Integer den = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  Integer content = 0;
  for (const auto& c : a.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (out.back() < 0) content = -content;
  for (auto& v : out) v /= content;
  return out;
}

namespace {

// q^n * f(p/q) for coprime p, q with q > 0, by integer Horner.
Integer homogeneous_value(const std::vector<Integer>& f, const Integer& p, const Integer& q) {
  Integer acc = 0;
  Integer qpow = 1;
  // acc = sum f_i p^i q^(n-i), evaluated from the top.
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = acc * p + f[i] * qpow;
    qpow *= q;
  }
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const QUniPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::zero_polynomial, "roots of the zero polynomial");
  std::set<Rational> roots;
  std::vector<Integer> f = primitive_integer_form(a);
  std::size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  if (f.size() >= 2) {
    const auto nums = positive_divisors(f.front());
    const auto dens = positive_divisors(f.back());
    // f(1) and f(-1) prune candidates: (q - p) | f(1) and (q + p) | f(-1).
    Integer f1 = 0, fm1 = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      f1 += f[i];
      fm1 += (i % 2 ? -f[i] : f[i]);
    }
    for (const auto& q : dens) {
      for (const auto& pabs : nums) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), pabs.get_mpz_t(), q.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          Integer p = sign * pabs;
          Integer dm = q - p, dp = q + p;
          if (dm != 0 && !mpz_divisible_p(f1.get_mpz_t(), dm.get_mpz_t())) continue;
          if (dp != 0 && !mpz_divisible_p(fm1.get_mpz_t(), dp.get_mpz_t())) continue;
          if (homogeneous_value(f, p, q) == 0) roots.insert(make_rational(p, q));
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace dioph
