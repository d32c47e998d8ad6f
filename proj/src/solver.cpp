#include "dioph/solver.hpp"

#include <exception>
#include <map>

#include "dioph/bounds.hpp"
#include "dioph/elimination.hpp"

namespace dioph {

namespace {

using Wide = __int128;

void require_nonzero(const Integer& m) {
  if (m == 0)
    throw Error(ErrorCode::invalid_argument,
                "m = 0 has the infinitely many solutions x = -y");
}

// Exact integer square root of n, or -1 when n is not a perfect square.
Integer exact_sqrt(const Integer& n) {
  if (n < 0) return -1;
  const Integer s = isqrt(n);
  return s * s == n ? s : Integer(-1);
}

}  // namespace

std::vector<IntegerPoint> solve_cubesum_bruteforce(const Integer& m) {
  require_nonzero(m);
  const Integer bound = cubesum_coordinate_bound(m);
  if (bound > kBruteForceRadiusCap)
    throw Error(ErrorCode::resource_limit,
                "brute-force radius " + bound.get_str() + " exceeds " +
                    std::to_string(kBruteForceRadiusCap) + "; use the divisor method");
  const long b = bound.get_si();
  const Wide target = m.get_si();
  std::vector<IntegerPoint> out;
  for (long x = -b; x <= b; ++x) {
    const Wide x3 = Wide(x) * x * x;
    for (long y = -b; y <= b; ++y)
      if (x3 + Wide(y) * y * y == target) out.push_back({Integer(x), Integer(y)});
  }
  return out;
}

std::vector<IntegerPoint> solve_cubesum_divisor(const Integer& m) {
  require_nonzero(m);
  std::vector<IntegerPoint> out;
  // x^2 - xy + y^2 > 0 away from the origin, so a = x + y has the sign of m.
  for (const Integer& d : positive_divisors(abs(m))) {
    const Integer a = sgn(m) > 0 ? d : Integer(-d);
    const Integer c = m / a;
    // x, y are the roots of X^2 - a X + (a^2 - c)/3; 3x = (3a +- sqrt(12c - 3a^2)) / 2.
    const Integer s = exact_sqrt(12 * c - 3 * a * a);
    if (s < 0) continue;
    for (const Integer& root : {Integer(3 * a + s), Integer(3 * a - s)}) {
      if (root % 6 != 0) continue;
      const Integer x = root / 6, y = a - x;
      if (x * x * x + y * y * y == m) out.push_back({x, y});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> cubesum_mismatches_serial(long lo, long hi) {
  std::vector<long> bad;
  for (long m = lo; m <= hi; ++m)
    if (m != 0 && solve_cubesum_bruteforce(m) != solve_cubesum_divisor(m)) bad.push_back(m);
  return bad;
}

std::vector<long> cubesum_mismatches(long lo, long hi) {
  if (hi < lo) return {};
  std::vector<char> flags(static_cast<std::size_t>(hi - lo + 1), 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long m = lo; m <= hi; ++m)
    if (m != 0)
      flags[static_cast<std::size_t>(m - lo)] =
          solve_cubesum_bruteforce(m) != solve_cubesum_divisor(m);
  std::vector<long> bad;
  for (long m = lo; m <= hi; ++m)
    if (flags[static_cast<std::size_t>(m - lo)]) bad.push_back(m);
  return bad;
}

std::vector<std::uint32_t> cube_pair_counts_serial(std::uint64_t limit) {
  std::vector<std::uint32_t> counts(limit + 1, 0);
  for (std::uint64_t x = 1; 2 * x * x * x <= limit; ++x)
    for (std::uint64_t y = x; x * x * x + y * y * y <= limit; ++y) ++counts[x * x * x + y * y * y];
  return counts;
}

std::vector<std::uint32_t> cube_pair_counts(std::uint64_t limit) {
  std::vector<std::uint32_t> counts(limit + 1, 0);
  std::uint64_t xmax = 0;
  while (2 * (xmax + 1) * (xmax + 1) * (xmax + 1) <= limit) ++xmax;
#pragma omp parallel for schedule(dynamic)
  for (std::uint64_t x = 1; x <= xmax; ++x)
    for (std::uint64_t y = x; x * x * x + y * y * y <= limit; ++y) {
#pragma omp atomic
      ++counts[x * x * x + y * y * y];
    }
  return counts;
}

Integer taxicab_smallest(unsigned ways) {
  if (ways != 2)
    throw Error(ErrorCode::unsupported, "only the two-way taxicab number is supported");
  for (std::uint64_t limit = 1 << 10; limit <= (std::uint64_t{1} << 32); limit <<= 1) {
    const auto counts = cube_pair_counts(limit);
    for (std::uint64_t n = 1; n <= limit; ++n)
      if (counts[n] >= ways) return Integer(static_cast<unsigned long>(n));
  }
  throw Error(ErrorCode::resource_limit, "taxicab search exceeded 2^32");
}

Integer nf_height(const Rational& x, const Rational& y) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), x.get_den_mpz_t(), y.get_den_mpz_t());
  const Integer p = x.get_num() * (r / x.get_den());
  const Integer q = y.get_num() * (r / y.get_den());
  return std::max({Integer(abs(p)), Integer(abs(q)), r});
}

// ---- function-field search --------------------------------------------------

namespace {

// One ansatz: exact degrees of p and q (-1 for the zero polynomial) and of the
// monic denominator r.
struct Profile {
  int dp = -1, dq = -1, dr = 0;
  /// Shift c in the coprimality witness Res_t(r, p + c q) != 0.
  long shift = 0;
};

struct ProfileOutcome {
  std::vector<QPoint> points;
  std::size_t unresolved = 0;
  std::exception_ptr error;
};

class Ansatz {
 public:
  Ansatz(const QPoly& f, const Profile& profile, bool polynomial_mode, unsigned n)
      : f_(f.with_vars(family_ring())), profile_(profile), polynomial_(polynomial_mode) {
    if (polynomial_) {
      add_block("p", static_cast<int>(n));
      add_block("q", static_cast<int>(n));
    } else {
      add_block("p", profile.dp);
      add_block("q", profile.dq);
      add_block("r", profile.dr - 1);
      if (needs_witness()) names_.push_back("w");
    }
    unknowns_ = names_;
    names_.push_back("t");
  }

  std::vector<QPoly> system() const {
    const std::size_t tvar = names_.size() - 1;
    const QPoly p = build("p", polynomial_ ? -1 : profile_.dp, false);
    const QPoly q = build("q", polynomial_ ? -1 : profile_.dq, false);
    const QPoly r = polynomial_ ? constant(1) : build("r", profile_.dr, true);
    const std::size_t xy[] = {0, 1};
    const int d = std::max(f_.degree_in(xy), 0);
    auto powers = [&](const QPoly& base) {
      std::vector<QPoly> v{constant(1)};
      for (int i = 0; i < d; ++i) v.push_back(v.back() * base);
      return v;
    };
    const auto pp = powers(p), qp = powers(q), rp = powers(r);
    QPoly sum = constant(0);
    for (const auto& [e, c] : f_.terms()) {
      Exponents tpow(names_.size(), 0);
      tpow[tvar] = e[2];
      sum += (pp[e[0]] * qp[e[1]] * rp[d - e[0] - e[1]]).shifted(tpow).scaled(c);
    }
    std::vector<QPoly> eqs;
    for (const auto& coeff : sum.coefficients_in(tvar))
      if (!coeff.is_zero()) eqs.push_back(coeff.with_vars(unknowns_));
    if (!polynomial_) {
      // Leading coefficients nonzero and, when r is not constant,
      // gcd(r, p + c q) = 1, through w * lc(p) * lc(q) * Res - 1 = 0.
      QPoly witness = constant(1);
      if (profile_.dp >= 0) witness *= var("p" + std::to_string(profile_.dp));
      if (profile_.dq >= 0) witness *= var("q" + std::to_string(profile_.dq));
      if (profile_.dr > 0)
        witness *= resultant(r, p + q.scaled(Rational(profile_.shift)), tvar);
      if (needs_witness())
        eqs.push_back((var("w") * witness - constant(1)).with_vars(unknowns_));
    }
    if (eqs.empty()) eqs.push_back(QPoly(RationalField{}, unknowns_));
    return eqs;
  }

  /// Point for one coefficient solution, in the order of the unknowns.
  QPoint point(const std::vector<Rational>& values) const {
    auto coeffs = [&](const std::string& prefix, int top, bool monic) {
      std::vector<Rational> c;
      for (int i = 0; i <= top; ++i) {
        const std::string name = prefix + std::to_string(i);
        const auto it = std::find(unknowns_.begin(), unknowns_.end(), name);
        c.push_back(it != unknowns_.end() ? values[static_cast<std::size_t>(it - unknowns_.begin())]
                                          : Rational(monic && i == top ? 1 : 0));
      }
      return QUniPoly(RationalField{}, c);
    };
    if (polynomial_) {
      const int n = static_cast<int>(count_block("p")) - 1;
      return QPoint{coeffs("p", n, false), coeffs("q", n, false),
                    QUniPoly::constant(RationalField{}, Rational(1))};
    }
    return QPoint{coeffs("p", profile_.dp, false), coeffs("q", profile_.dq, false),
                  coeffs("r", profile_.dr, true)};
  }

 private:
  bool needs_witness() const { return profile_.dp >= 0 || profile_.dq >= 0 || profile_.dr > 0; }

  void add_block(const std::string& prefix, int top) {
    for (int i = 0; i <= top; ++i) names_.push_back(prefix + std::to_string(i));
  }

  std::size_t count_block(const std::string& prefix) const {
    return static_cast<std::size_t>(std::count_if(unknowns_.begin(), unknowns_.end(), [&](const auto& s) {
      return s.rfind(prefix, 0) == 0;
    }));
  }

  QPoly constant(long c) const { return QPoly::constant(RationalField{}, names_, Rational(c)); }
  QPoly var(const std::string& name) const { return QPoly::variable(RationalField{}, names_, name); }

  // sum_i prefix_i t^i over the unknowns present; top = -1 takes all of the
  // block (polynomial mode), a monic block adds t^top.
  QPoly build(const std::string& prefix, int top, bool monic) const {
    const std::size_t tvar = names_.size() - 1;
    QPoly out = constant(0);
    if (top < 0 && polynomial_) top = static_cast<int>(count_block(prefix)) - 1;
    for (int i = 0; i <= top; ++i) {
      Exponents shift(names_.size(), 0);
      shift[tvar] = static_cast<std::uint32_t>(i);
      const std::string name = prefix + std::to_string(i);
      const QPoly coeff = std::find(names_.begin(), names_.end(), name) != names_.end()
                              ? var(name)
                              : constant(monic && i == top ? 1 : 0);
      out += coeff.shifted(shift);
    }
    return out;
  }

  QPoly f_;
  Profile profile_;
  bool polynomial_;
  std::vector<std::string> names_;
  std::vector<std::string> unknowns_;
};

std::vector<Profile> profiles(unsigned n, SearchMode mode) {
  if (mode == SearchMode::polynomial) return {Profile{}};
  std::vector<Profile> out;
  const int top = static_cast<int>(n);
  for (int dr = 0; dr <= top; ++dr)
    for (int dp = -1; dp <= top; ++dp)
      for (int dq = -1; dq <= top; ++dq) {
        if (dp < 0 && dq < 0 && dr > 0) continue;  // gcd would be r
        // dr + 1 shifts: each root of r rules out at most one.
        const long shifts = dr > 0 ? dr + 1 : 1;
        for (long c = 1; c <= shifts; ++c) out.push_back({dp, dq, dr, c});
      }
  return out;
}

ProfileOutcome run_profile(const QPoly& f, unsigned n, SearchMode mode, const Profile& profile,
                           const GroebnerOptions& options) {
  ProfileOutcome out;
  try {
    const Ansatz ansatz(f, profile, mode == SearchMode::polynomial, n);
    const auto solved = solve_rational(ansatz.system(), options);
    out.unresolved = solved.unresolved_branches;
    for (const auto& values : solved.points) {
      const QPoint pt = ansatz.point(values).normalized();
      if (verify_ff_solution(f, pt) && ff_height(pt) <= n) out.points.push_back(pt);
    }
  } catch (...) {
    out.error = std::current_exception();
  }
  return out;
}

bool point_order(const QPoint& a, const QPoint& b) {
  const unsigned ha = ff_height(a), hb = ff_height(b);
  if (ha != hb) return ha < hb;
  return std::tuple(a.p.to_string(), a.q.to_string(), a.r.to_string()) <
         std::tuple(b.p.to_string(), b.q.to_string(), b.r.to_string());
}

SearchResult merge(const std::vector<Profile>& list, std::vector<ProfileOutcome>& outcomes,
                   unsigned n, SearchMode mode) {
  SearchResult result;
  result.systems = list.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].error) {
      try {
        std::rethrow_exception(outcomes[i].error);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::resource_limit) throw;
        const auto& pr = list[i];
        throw Error(ErrorCode::resource_limit,
                    "search infeasible at N = " + std::to_string(n) +
                        (mode == SearchMode::rational
                             ? " (degree profile p:" + std::to_string(pr.dp) +
                                   " q:" + std::to_string(pr.dq) + " r:" + std::to_string(pr.dr) + ")"
                             : std::string()) +
                        ": " + e.what());
      }
    }
    result.unresolved_branches += outcomes[i].unresolved;
    for (auto& pt : outcomes[i].points) result.points.push_back(std::move(pt));
  }
  std::sort(result.points.begin(), result.points.end(), point_order);
  result.points.erase(std::unique(result.points.begin(), result.points.end()), result.points.end());
  return result;
}

void check_search_input(const QPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "cannot search solutions of 0");
  (void)f.with_vars(family_ring());
}

}  // namespace

SearchResult search_ff_solutions_serial(const QPoly& f, unsigned N, SearchMode mode,
                                        const GroebnerOptions& options) {
  check_search_input(f);
  const auto list = profiles(N, mode);
  std::vector<ProfileOutcome> outcomes;
  for (const auto& pr : list) outcomes.push_back(run_profile(f, N, mode, pr, options));
  return merge(list, outcomes, N, mode);
}

SearchResult search_ff_solutions(const QPoly& f, unsigned N, SearchMode mode,
                                 const GroebnerOptions& options) {
  check_search_input(f);
  const auto list = profiles(N, mode);
  std::vector<ProfileOutcome> outcomes(list.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < list.size(); ++i) outcomes[i] = run_profile(f, N, mode, list[i], options);
  return merge(list, outcomes, N, mode);
}

// ---- Frobenius -----------------------------------------------------------------

std::uint64_t frobenius_power(std::uint64_t p, unsigned n) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > UINT32_MAX / p) throw Error(ErrorCode::resource_limit, "p^n too large");
    q *= p;
  }
  return q;
}

FpPoint twist_solution(const FpPoint& pt, unsigned n) {
  const std::uint64_t q = frobenius_power(pt.r.field().characteristic(), n);
  // Over F_p, a(t)^(p^n) = a(t^(p^n)).
  return FpPoint{pt.p.inflate(q), pt.q.inflate(q), pt.r.inflate(q)}.normalized();
}

bool is_new_solution(const FpPoint& pt, const std::vector<FpPoint>& prior) {
  const FpPoint target = pt.normalized();
  const std::uint64_t p = target.r.field().characteristic();
  const unsigned h = ff_height(target);
  for (const auto& old : prior) {
    const unsigned h0 = ff_height(old);
    if (h0 == 0) {
      // Constant points are fixed by Frobenius.
      if (old.normalized() == target) return false;
      continue;
    }
    std::uint64_t scale = 1;
    for (unsigned n = 0; static_cast<std::uint64_t>(h0) * scale <= h; ++n, scale *= p) {
      if (static_cast<std::uint64_t>(h0) * scale == h && twist_solution(old, n) == target)
        return false;
    }
  }
  return true;
}

}  // namespace dioph
