#include "dioph/scalar.hpp"

#include <algorithm>
#include <charconv>

namespace dioph {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

void check_modulus(u64 a, u64 b) {
  if (a != b || a == 0) {
    throw Error(ErrorCode::domain_mismatch,
                "F_p elements with moduli " + std::to_string(a) + " and " +
                    std::to_string(b));
  }
}

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  std::string digits(s.substr(i));
  out = Integer(digits, 10);
  if (s[0] == '-') out = -out;
  return true;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer diff = x - y;
          if (diff < 0) diff = -diff;
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = x - ys;
        if (diff < 0) diff = -diff;
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::invalid_argument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  Integer num, den = 1;
  bool ok = parse_integer(text.substr(0, slash), num);
  if (ok && slash != std::string_view::npos) {
    std::string_view d = text.substr(slash + 1);
    ok = !d.empty() && d[0] != '-' && d[0] != '+' && parse_integer(d, den);
  }
  if (!ok)
    throw Error(ErrorCode::invalid_argument,
                "not a rational number: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "isqrt of a negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "cannot factor zero");
  Integer m = abs(n);
  std::vector<Integer> primes;
  for (unsigned long p = 2; p < 10000 && m > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      primes.emplace_back(p);
      m /= p;
    }
  }
  factor_into(m, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, unsigned>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

Fp::Fp(std::uint64_t residue, std::uint64_t modulus) : v_(residue % modulus), p_(modulus) {}

Fp Fp::inverse() const {
  if (v_ == 0) throw Error(ErrorCode::invalid_argument, "inverse of zero in F_p");
  return Fp(pow_mod(v_, p_ - 2, p_), p_);
}

Fp Fp::pow(std::uint64_t e) const { return Fp(pow_mod(v_, e, p_), p_); }

Fp operator+(const Fp& a, const Fp& b) {
  check_modulus(a.p_, b.p_);
  u64 s = a.v_ + b.v_;
  if (s >= a.p_ || s < a.v_) s -= a.p_;
  return Fp(s, a.p_);
}

Fp operator-(const Fp& a, const Fp& b) {
  check_modulus(a.p_, b.p_);
  return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.p_ - (b.v_ - a.v_), a.p_);
}

Fp operator*(const Fp& a, const Fp& b) {
  check_modulus(a.p_, b.p_);
  return Fp(mul_mod(a.v_, b.v_, a.p_), a.p_);
}

std::string to_string(const Fp& a) { return std::to_string(a.residue()); }

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p))
    throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
}

Fp PrimeField::from_integer(const Integer& n) const {
  Integer r = n % Integer(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Fp(r.get_ui(), p_);
}

Fp PrimeField::from_rational(const Rational& q) const {
  Fp den = from_integer(q.get_den());
  if (is_zero(den))
    throw Error(ErrorCode::invalid_argument,
                "denominator of " + to_string(q) + " vanishes mod " + std::to_string(p_));
  return from_integer(q.get_num()) / den;
}

}  // namespace dioph
