#include "dioph/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dioph {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> sorted = precedence_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i)
      throw Error(ErrorCode::invalid_argument, "variable precedence must be a permutation");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialOrder(OrderKind::lex, std::move(p));
}

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return MonomialOrder(OrderKind::degrevlex, std::move(p));
}

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  if (kind_ == OrderKind::lex) {
    for (std::size_t v : precedence_) {
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  const auto da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = precedence_.size(); i-- > 0;) {
    const std::size_t v = precedence_[i];
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

bool IdealBasis::is_unit() const {
  return generators.size() == 1 && generators.front().is_constant() &&
         !generators.front().is_zero();
}

namespace {

struct Term {
  Exponents e;
  Rational c;
};

// Ascending in the monomial order; the leading term is back().
using TermList = std::vector<Term>;

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_of(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Exponents difference(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

TermList to_terms(const QPoly& f, const MonomialOrder& order) {
  TermList t;
  t.reserve(f.num_terms());
  for (const auto& [e, c] : f.terms()) t.push_back({e, c});
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.e, b.e) < 0; });
  return t;
}

QPoly from_terms(const TermList& t, const std::vector<std::string>& vars) {
  QPoly p(RationalField{}, vars);
  for (const auto& term : t) p.add_term(term.e, term.c);
  return p;
}

// f - c * x^shift * g, merging two ascending lists.
TermList sub_scaled(const TermList& f, const Rational& c, const Exponents& shift,
                    const TermList& g, const MonomialOrder& order) {
  TermList out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  Exponents ge(shift.size());
  auto shifted = [&](std::size_t k) {
    for (std::size_t v = 0; v < ge.size(); ++v) ge[v] = g[k].e[v] + shift[v];
  };
  if (j < g.size()) shifted(j);
  while (i < f.size() || j < g.size()) {
    int cmp;
    if (i == f.size())
      cmp = 1;
    else if (j == g.size())
      cmp = -1;
    else
      cmp = order.compare(f[i].e, ge);
    if (cmp < 0) {
      out.push_back(f[i++]);
    } else if (cmp > 0) {
      out.push_back({ge, -c * g[j].c});
      if (++j < g.size()) shifted(j);
    } else {
      Rational v = f[i].c - c * g[j].c;
      if (sgn(v) != 0) out.push_back({f[i].e, std::move(v)});
      ++i;
      if (++j < g.size()) shifted(j);
    }
  }
  return out;
}

void make_monic(TermList& f) {
  if (f.empty()) return;
  const Rational inv = 1 / f.back().c;
  for (auto& t : f) t.c *= inv;
}

TermList normal_form(TermList p, const std::vector<const TermList*>& basis,
                     const MonomialOrder& order) {
  TermList rem;
  while (!p.empty()) {
    const Term& lt = p.back();
    const TermList* divisor = nullptr;
    for (const TermList* g : basis) {
      if (!g->empty() && divides(g->back().e, lt.e)) {
        divisor = g;
        break;
      }
    }
    if (divisor) {
      Rational c = lt.c / divisor->back().c;
      Exponents shift = difference(lt.e, divisor->back().e);
      p = sub_scaled(p, c, shift, *divisor, order);
    } else {
      rem.push_back(lt);
      p.pop_back();
    }
  }
  std::reverse(rem.begin(), rem.end());
  return rem;
}

TermList spoly_terms(const TermList& f, const TermList& g, const MonomialOrder& order) {
  const Exponents l = lcm_of(f.back().e, g.back().e);
  TermList a;
  const Exponents sf = difference(l, f.back().e);
  const Rational cf = 1 / f.back().c;
  a.reserve(f.size());
  for (const auto& t : f) {
    Exponents e(t.e.size());
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = t.e[v] + sf[v];
    a.push_back({std::move(e), t.c * cf});
  }
  return sub_scaled(a, 1 / g.back().c, difference(l, g.back().e), g, order);
}

struct Pair {
  std::size_t i, j;
  Exponents lcm;
  std::uint32_t degree;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GroebnerOptions& options)
      : order_(order), options_(options) {}

  void add(TermList f) {
    make_monic(f);
    const std::size_t k = basis_.size();
    const Exponents& lf = f.back().e;

    // Chain criterion on the existing pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      return divides(lf, p.lcm) && lcm_of(basis_[p.i].back().e, lf) != p.lcm &&
             lcm_of(basis_[p.j].back().e, lf) != p.lcm;
    });

    // New pairs grouped by lcm; keep one per minimal lcm, none if any pair in
    // the group has coprime leading monomials.
    std::vector<std::pair<Exponents, std::vector<std::size_t>>> groups;
    for (std::size_t i = 0; i < k; ++i) {
      Exponents l = lcm_of(basis_[i].back().e, lf);
      auto it = std::find_if(groups.begin(), groups.end(),
                             [&](const auto& g) { return g.first == l; });
      if (it == groups.end())
        groups.push_back({std::move(l), {i}});
      else
        it->second.push_back(i);
    }
    std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) {
      return order_.compare(a.first, b.first) < 0;
    });
    std::vector<const Exponents*> minimal;
    for (const auto& [l, members] : groups) {
      bool blocked = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const Exponents* m) { return divides(*m, l); });
      if (blocked) continue;
      minimal.push_back(&l);
      bool has_coprime = std::any_of(members.begin(), members.end(), [&](std::size_t i) {
        return coprime(basis_[i].back().e, lf);
      });
      if (!has_coprime) pairs_.push_back({members.front(), k, l, total_degree(l)});
    }
    basis_.push_back(std::move(f));
  }

  void run() {
    std::size_t steps = 0;
    while (!pairs_.empty()) {
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return order_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *it;
      pairs_.erase(it);
      if (++steps > options_.max_steps)
        throw Error(ErrorCode::resource_limit,
                    "Groebner step cap of " + std::to_string(options_.max_steps) + " exceeded");
      if (options_.deadline && std::chrono::steady_clock::now() > *options_.deadline)
        throw Error(ErrorCode::resource_limit, "Groebner time budget exhausted");
      TermList h = normal_form(spoly_terms(basis_[p.i], basis_[p.j], order_), views(), order_);
      if (h.empty()) continue;
      if (h.back().e == Exponents(h.back().e.size(), 0)) {
        basis_.assign(1, TermList{h.back()});
        make_monic(basis_.front());
        pairs_.clear();
        return;
      }
      add(std::move(h));
    }
  }

  std::vector<TermList> reduced() const {
    std::vector<const TermList*> sorted;
    for (const auto& g : basis_) sorted.push_back(&g);
    std::sort(sorted.begin(), sorted.end(), [&](const TermList* a, const TermList* b) {
      return order_.compare(a->back().e, b->back().e) < 0;
    });
    std::vector<const TermList*> minimal;
    for (const TermList* g : sorted) {
      bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const TermList* m) {
        return divides(m->back().e, g->back().e);
      });
      if (!redundant) minimal.push_back(g);
    }
    std::vector<TermList> out;
    for (const TermList* g : minimal) {
      std::vector<const TermList*> others;
      for (const TermList* h : minimal)
        if (h != g) others.push_back(h);
      TermList tail(g->begin(), g->end() - 1);
      TermList r = normal_form(std::move(tail), others, order_);
      r.push_back(g->back());
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<const TermList*> views() const {
    std::vector<const TermList*> v;
    v.reserve(basis_.size());
    for (const auto& g : basis_) v.push_back(&g);
    return v;
  }

  const MonomialOrder& order_;
  const GroebnerOptions& options_;
  std::vector<TermList> basis_;
  std::vector<Pair> pairs_;
};

void check_order(const MonomialOrder& order, std::size_t nvars) {
  if (order.precedence().size() != nvars)
    throw Error(ErrorCode::domain_mismatch, "monomial order does not match the ring");
}

}  // namespace

Exponents leading_monomial(const QPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::zero_polynomial, "leading monomial of zero");
  const Exponents* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || order.compare(e, *best) > 0) best = &e;
  return *best;
}

Rational leading_coefficient(const QPoly& f, const MonomialOrder& order) {
  return f.coefficient(leading_monomial(f, order));
}

QPoly s_polynomial(const QPoly& f, const QPoly& g, const MonomialOrder& order) {
  f.check_compatible(g);
  check_order(order, f.nvars());
  return from_terms(spoly_terms(to_terms(f, order), to_terms(g, order), order), f.vars());
}

QPoly reduce(const QPoly& f, const IdealBasis& basis) {
  check_order(basis.order, f.nvars());
  std::vector<TermList> gens;
  for (const auto& g : basis.generators) {
    f.check_compatible(g);
    if (!g.is_zero()) gens.push_back(to_terms(g, basis.order));
  }
  std::vector<const TermList*> views;
  for (const auto& g : gens) views.push_back(&g);
  return from_terms(normal_form(to_terms(f, basis.order), views, basis.order), f.vars());
}

IdealBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& order,
                      const GroebnerOptions& options) {
  if (gens.empty()) throw Error(ErrorCode::invalid_argument, "empty generator list");
  const auto& vars = gens.front().vars();
  check_order(order, vars.size());
  Engine engine(order, options);
  for (const auto& g : gens) {
    gens.front().check_compatible(g);
    if (g.is_zero()) continue;
    if (g.is_constant()) {
      return IdealBasis{{g.constant_like(Rational(1))}, order, true};
    }
    engine.add(to_terms(g, order));
  }
  engine.run();
  IdealBasis out{{}, order, true};
  for (const auto& t : engine.reduced()) out.generators.push_back(from_terms(t, vars));
  return out;
}

IdealBasis eliminate(const IdealBasis& basis, std::span<const std::size_t> keep) {
  if (!basis.is_groebner || basis.order.kind() != OrderKind::lex)
    throw Error(ErrorCode::invalid_argument, "elimination needs a lex Groebner basis");
  const auto& prec = basis.order.precedence();
  auto kept = [&](std::size_t v) { return std::find(keep.begin(), keep.end(), v) != keep.end(); };
  bool seen_kept = false;
  for (std::size_t v : prec) {
    if (kept(v))
      seen_kept = true;
    else if (seen_kept)
      throw Error(ErrorCode::invalid_argument,
                  "eliminated variables must outrank kept variables in the lex order");
  }
  IdealBasis out{{}, basis.order, true};
  for (const auto& g : basis.generators) {
    bool free = true;
    for (std::size_t v = 0; v < g.nvars() && free; ++v)
      if (!kept(v) && g.involves(v)) free = false;
    if (free) out.generators.push_back(g);
  }
  return out;
}

bool is_zero_dimensional(const IdealBasis& basis, std::span<const std::size_t> vars) {
  if (basis.is_unit()) return true;
  for (std::size_t v : vars) {
    bool found = false;
    for (const auto& g : basis.generators) {
      Exponents lm = leading_monomial(g, basis.order);
      bool pure = lm[v] > 0;
      for (std::size_t i = 0; i < lm.size() && pure; ++i)
        if (i != v && lm[i] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_zero_dimensional(const IdealBasis& basis) {
  if (basis.generators.empty()) return basis.order.precedence().empty();
  std::vector<std::size_t> all(basis.generators.front().nvars());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return is_zero_dimensional(basis, all);
}

std::size_t quotient_dimension(const IdealBasis& basis) {
  if (!is_zero_dimensional(basis))
    throw Error(ErrorCode::dimensionality, "ideal is not zero-dimensional");
  if (basis.is_unit()) return 0;
  std::vector<Exponents> lms;
  for (const auto& g : basis.generators) lms.push_back(leading_monomial(g, basis.order));
  const std::size_t n = lms.front().size();
  auto standard = [&](const Exponents& e) {
    return std::none_of(lms.begin(), lms.end(), [&](const Exponents& m) { return divides(m, e); });
  };
  std::size_t count = 0;
  Exponents e(n, 0);
  // Depth-first over variables; along each axis, divisibility is monotone.
  auto visit = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (e[v] = 0; standard(e); ++e[v]) self(self, v + 1);
    e[v] = 0;
  };
  visit(visit, 0);
  return count;
}

QUniPoly minimal_polynomial(const IdealBasis& basis, std::size_t var) {
  if (!basis.is_groebner) throw Error(ErrorCode::invalid_argument, "basis is not Groebner");
  if (!is_zero_dimensional(basis))
    throw Error(ErrorCode::dimensionality, "ideal is not zero-dimensional");
  RationalField q;
  if (basis.is_unit()) return QUniPoly::constant(q, Rational(1));
  const auto& order = basis.order;
  std::vector<TermList> gens;
  for (const auto& g : basis.generators) gens.push_back(to_terms(g, order));
  std::vector<const TermList*> views;
  for (const auto& g : gens) views.push_back(&g);

  using Vec = std::map<Exponents, Rational>;
  struct Row {
    Vec v;
    std::vector<Rational> combo;
  };
  std::map<Exponents, Row> rows;  // keyed by pivot (largest key)
  const std::size_t n = basis.generators.front().nvars();
  TermList power{{Exponents(n, 0), Rational(1)}};
  power = normal_form(std::move(power), views, order);
  for (std::size_t k = 0;; ++k) {
    Vec v;
    for (const auto& t : power) v.emplace(t.e, t.c);
    std::vector<Rational> combo(k + 1, Rational(0));
    combo[k] = 1;
    while (!v.empty()) {
      auto pivot = rows.find(v.rbegin()->first);
      if (pivot == rows.end()) break;
      const Rational factor = v.rbegin()->second / pivot->second.v.rbegin()->second;
      for (const auto& [e, c] : pivot->second.v) {
        auto [it, inserted] = v.try_emplace(e, -factor * c);
        if (!inserted) {
          it->second -= factor * c;
          if (sgn(it->second) == 0) v.erase(it);
        }
      }
      for (std::size_t i = 0; i < pivot->second.combo.size(); ++i)
        combo[i] -= factor * pivot->second.combo[i];
    }
    if (v.empty()) return QUniPoly(q, std::move(combo)).monic();
    Exponents key = v.rbegin()->first;
    rows.emplace(std::move(key), Row{std::move(v), std::move(combo)});
    // Next power: var * NF(var^k), reduced again.
    for (auto& t : power) ++t.e[var];
    std::sort(power.begin(), power.end(),
              [&](const Term& a, const Term& b) { return order.compare(a.e, b.e) < 0; });
    power = normal_form(std::move(power), views, order);
  }
}

IdealBasis zero_dimensional_radical(const IdealBasis& basis, const GroebnerOptions& options) {
  if (basis.is_unit()) return basis;
  std::vector<QPoly> gens = basis.generators;
  const std::vector<std::string> vars = gens.front().vars();
  for (std::size_t v = 0; v < vars.size(); ++v) {
    QUniPoly m = minimal_polynomial(basis, v);
    gens.push_back(squarefree_part(m).to_poly(vars, v));
  }
  return buchberger(gens, basis.order, options);
}

namespace {

// Each level solves the last variable of the current ring over Q and recurses
// on the ring without it.
void solve_recursive(const std::vector<QPoly>& polys, std::vector<Rational>& assignment,
                     const std::vector<std::string>& all_vars, RationalSolutions& out,
                     const GroebnerOptions& options) {
  const std::vector<std::string> vars = polys.front().vars();
  IdealBasis g = buchberger(polys, MonomialOrder::degrevlex(vars.size()), options);
  if (g.is_unit()) return;
  if (vars.empty()) {
    out.points.push_back(assignment);
    return;
  }
  if (!is_zero_dimensional(g))
    throw Error(ErrorCode::dimensionality,
                "system is not zero-dimensional (infinitely many complex solutions)");
  const std::size_t v = vars.size() - 1;
  const std::size_t slot =
      static_cast<std::size_t>(std::find(all_vars.begin(), all_vars.end(), vars[v]) - all_vars.begin());
  const std::vector<std::string> rest(vars.begin(), vars.end() - 1);
  QUniPoly m = minimal_polynomial(g, v);
  const auto roots = rational_roots(m);
  out.unresolved_branches += static_cast<std::size_t>(squarefree_part(m).degree()) - roots.size();
  for (const auto& root : roots) {
    std::vector<QPoly> sub;
    for (const auto& p : g.generators) {
      QPoly s = p.substitute(v, root).with_vars(rest);
      if (!s.is_zero()) sub.push_back(std::move(s));
    }
    if (sub.empty()) sub.push_back(QPoly(RationalField{}, rest));
    assignment[slot] = root;
    solve_recursive(sub, assignment, all_vars, out, options);
  }
}

}  // namespace

RationalSolutions solve_rational(const std::vector<QPoly>& system, const GroebnerOptions& options) {
  if (system.empty()) throw Error(ErrorCode::invalid_argument, "empty system");
  for (const auto& p : system) system.front().check_compatible(p);
  const std::size_t n = system.front().nvars();
  std::vector<Rational> assignment(n, Rational(0));
  RationalSolutions out;
  std::vector<QPoly> nonzero;
  for (const auto& p : system)
    if (!p.is_zero()) nonzero.push_back(p);
  if (nonzero.empty()) {
    if (n == 0) {
      out.points.push_back({});
      return out;
    }
    throw Error(ErrorCode::dimensionality, "zero system has infinitely many solutions");
  }
  solve_recursive(nonzero, assignment, system.front().vars(), out, options);
  for (const auto& pt : out.points)
    for (const auto& p : system)
      if (!is_zero(p.evaluate(pt)))
        throw std::logic_error("solve_rational produced a non-solution");
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace dioph
