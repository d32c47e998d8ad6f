#include "dioph/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "dioph/bounds.hpp"
#include "dioph/fibration.hpp"
#include "dioph/geography.hpp"
#include "dioph/parse.hpp"
#include "dioph/solver.hpp"

namespace dioph::cli {

namespace {

using json = nlohmann::ordered_json;

// Exact numbers travel as strings so that no value is ever rounded.
std::string exact(const Integer& n) { return n.get_str(); }
std::string exact(const Rational& q) { return q.get_str(); }

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json assumptions = json::array();
  json caveats = json::array();
  std::optional<std::pair<std::string, std::string>> error;
  /// Plain-text body that replaces the key/value rendering (CSV tables).
  std::optional<std::string> text_body;

  json to_json() const {
    json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["assumptions"] = assumptions;
    j["caveats"] = caveats;
    if (error) j["error"] = {{"code", error->first}, {"message", error->second}};
    return j;
  }
};

void render_value(std::ostream& out, const json& v, int indent);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  return v.dump();
}

// Arrays of numbers and booleans print on one line; strings get one line each.
bool is_flat(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (e.is_structured() || e.is_string()) return v.empty();
  return true;
}

void render_entries(std::ostream& out, const json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : obj.items()) {
    out << pad << key << ":";
    render_value(out, v, indent);
  }
}

// Continues the line after "key:".
void render_value(std::ostream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (v.is_object()) {
    out << "\n";
    render_entries(out, v, indent + 2);
  } else if (is_flat(v)) {
    out << (v.empty() ? " (none)" : " ");
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "\n";
  } else if (v.is_array()) {
    out << "\n";
    for (const auto& e : v) {
      out << pad << "-";
      if (e.is_object()) {
        bool first = true;
        for (const auto& [key, item] : e.items()) {
          out << (first ? " " : pad + "  ") << key << ":";
          render_value(out, item, indent + 4);
          first = false;
        }
        if (e.empty()) out << "\n";
      } else {
        render_value(out, e, indent + 2);
      }
    }
  } else {
    out << " " << scalar_text(v) << "\n";
  }
}

void render_text(std::ostream& out, const Report& r) {
  if (r.text_body && !r.error) {
    out << *r.text_body;
    return;
  }
  out << "command: " << r.command << "\n";
  json body;
  body["inputs"] = r.inputs;
  body["results"] = r.results;
  body["assumptions"] = r.assumptions;
  body["caveats"] = r.caveats;
  render_entries(out, body, 0);
  if (r.error) out << "error: " << r.error->first << ": " << r.error->second << "\n";
}

// ---- input helpers ------------------------------------------------------------

Rational rational_arg(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorCode::invalid_argument, "--" + name + ": not a rational number: '" + text + "'");
  }
}

Integer integer_arg(const std::string& name, const std::string& text) {
  const Rational q = rational_arg(name, text);
  if (q.get_den() != 1) throw Error(ErrorCode::invalid_argument, "--" + name + " must be an integer");
  return q.get_num();
}

struct PolySource {
  std::string text;
  std::string file;

  void attach(CLI::App* app) {
    auto* poly = app->add_option("--poly", text, "polynomial in x, y, t");
    auto* path = app->add_option("--file", file, "file holding the polynomial text");
    poly->excludes(path);
  }

  bool given() const { return !text.empty() || !file.empty(); }

  std::string read() const {
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw Error(ErrorCode::invalid_argument, "cannot read '" + file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      std::string s = ss.str();
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
      return s;
    }
    if (text.empty()) throw Error(ErrorCode::invalid_argument, "one of --poly or --file is required");
    return text;
  }
};

const std::vector<std::string> kAssertionNames{"minimal", "ks-full-rank", "semistable",
                                               "non-isotrivial"};

Assumptions assumptions_from(const std::vector<std::string>& flags) {
  Assumptions a;
  for (const auto& f : flags) {
    if (f == "minimal") a.minimal = true;
    else if (f == "ks-full-rank") a.ks_full_rank = true;
    else if (f == "semistable") a.semistable = true;
    else if (f == "non-isotrivial") a.non_isotrivial = true;
  }
  return a;
}

json assumptions_json(const Assumptions& a) {
  json out = json::array();
  const bool values[] = {a.minimal, a.ks_full_rank, a.semistable, a.non_isotrivial};
  for (std::size_t i = 0; i < kAssertionNames.size(); ++i)
    out.push_back({{"name", kAssertionNames[i]}, {"asserted", values[i]}});
  return out;
}

void fill_bound(Report& r, const BoundReport& b) {
  for (const auto& [name, value] : b.inputs) r.inputs[name] = exact(value);
  r.results["bound"] = std::string(bound_kind_name(b.kind));
  r.results["value"] = b.value ? json(exact(*b.value)) : json(nullptr);
  r.results["search_degree"] = search_degree(b);
  r.assumptions = json::array();
  for (const auto& a : b.assumptions)
    r.assumptions.push_back({{"name", a.name}, {"asserted", a.asserted}, {"hard", a.hard}});
  for (const auto& c : b.caveats) r.caveats.push_back(c);
  if (!b.applicable()) {
    r.results["inapplicable_reason"] = b.inapplicable_reason;
    r.error = {std::string(error_code_name(ErrorCode::inapplicable)), b.inapplicable_reason};
  }
}

void fill_check(json& target, Report& r, const CheckResult& c) {
  target["rule"] = c.rule;
  target["comparison"] = c.comparison == Comparison::equal ? "equal" : "at-most";
  target["holds"] = c.holds;
  target["lhs"] = exact(c.lhs);
  target["rhs"] = exact(c.rhs);
  target["margin"] = exact(c.margin);
  target["applicable"] = c.applicable();
  json pre = json::array();
  for (const auto& p : c.preconditions) pre.push_back({{"name", p.name}, {"satisfied", p.satisfied}});
  target["preconditions"] = pre;
  for (const auto& cv : c.caveats) r.caveats.push_back(cv);
}

template <class F>
json point_json(const FunctionFieldPoint<F>& pt) {
  return {{"p", pt.p.to_string()}, {"q", pt.q.to_string()}, {"r", pt.r.to_string()},
          {"height", ff_height(pt)}};
}

// "p, q, r" with each entry a polynomial in t.
FpPoint parse_fp_point(const std::string& text, const PrimeField& field) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 3)
    throw Error(ErrorCode::invalid_argument, "a point is written 'p, q, r': '" + text + "'");
  const std::vector<std::string> ring{"t"};
  auto uni = [&](const std::string& s) {
    return FpUniPoly::from_poly(parse_poly(s, ring, field).poly, 0);
  };
  return FpPoint{uni(parts[0]), uni(parts[1]), uni(parts[2])};
}

// Common flags shared by every subcommand.
struct Globals {
  std::string format = "text";
  std::string assert_flags;
  std::vector<std::string> asserted;
};

void add_globals(CLI::App* app, Globals& g) {
  app->add_option("--format", g.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app->add_option("--assert-flags", g.assert_flags,
                  "comma-separated: minimal, ks-full-rank, semistable, non-isotrivial");
}

using Action = std::function<void(Report&)>;

// ---- subcommands --------------------------------------------------------------

struct SolveInteger {
  std::string m;
  std::string method = "divisor";

  void attach(CLI::App* app) {
    app->add_option("--m", m, "right-hand side of x^3 + y^3 = m")->required();
    app->add_option("--method", method, "divisor or bruteforce")
        ->check(CLI::IsMember({"divisor", "bruteforce"}));
  }

  void operator()(Report& r) const {
    const Integer value = integer_arg("m", m);
    r.inputs["m"] = exact(value);
    r.inputs["method"] = method;
    if (value == 0) throw Error(ErrorCode::invalid_argument, "m = 0 has the infinitely many solutions x = -y");
    r.results["coordinate_bound"] = exact(cubesum_coordinate_bound(value));
    const auto sols =
        method == "divisor" ? solve_cubesum_divisor(value) : solve_cubesum_bruteforce(value);
    json list = json::array();
    for (const auto& p : sols) list.push_back({{"x", exact(p.x)}, {"y", exact(p.y)}});
    r.results["count"] = sols.size();
    r.results["solutions"] = list;
  }
};

struct Taxicab {
  unsigned ways = 2;

  void attach(CLI::App* app) { app->add_option("--ways", ways, "number of representations"); }

  void operator()(Report& r) const {
    r.inputs["ways"] = ways;
    const Integer n = taxicab_smallest(ways);
    r.results["n"] = exact(n);
    json reps = json::array();
    for (const auto& p : solve_cubesum_divisor(n))
      if (p.x >= 1 && p.x <= p.y) reps.push_back({{"x", exact(p.x)}, {"y", exact(p.y)}});
    r.results["representations"] = reps;
    r.caveats.push_back("representations counted over the naturals 1 <= x <= y");
  }
};

json invariants_json(const FamilyInvariants& inv) {
  auto source = [](ValueSource s) { return s == ValueSource::computed ? "computed" : "user-supplied"; };
  json j;
  j["d"] = inv.d;
  j["e"] = inv.e;
  j["g"] = inv.g;
  j["s"] = inv.s;
  j["s_source"] = source(inv.s_source);
  j["k"] = inv.k;
  j["k_source"] = source(inv.k_source);
  j["omega_sq"] = inv.omega_sq ? json(exact(*inv.omega_sq)) : json(nullptr);
  if (inv.locus) {
    j["singular_parameters"] = inv.locus->finite_parameters.to_string();
    j["singular_at_infinity"] = inv.locus->infinity_is_singular;
  }
  j["usable_for_height_bound"] = inv.usable_for_height_bound();
  return j;
}

struct Invariants {
  PolySource poly;
  std::optional<unsigned> k, s;

  void attach(CLI::App* app) {
    poly.attach(app);
    app->add_option("--k", k, "override: rational components of singular fibers");
    app->add_option("--s", s, "override: number of singular fibers");
  }

  FamilyInvariants compute(Report& r) const {
    const std::string text = poly.read();
    r.inputs["poly"] = text;
    if (k) r.inputs["k"] = *k;
    if (s) r.inputs["s"] = *s;
    return extract_invariants(parse_qpoly(text), InvariantOverrides{k, s});
  }

  void operator()(Report& r) const {
    const FamilyInvariants inv = compute(r);
    r.results = invariants_json(inv);
    if (inv.genus_below_two()) r.caveats.push_back("generic genus below 2: the height bounds do not apply");
    if (inv.omega_sq)
      r.caveats.push_back("omega^2 = 3e(d-1)(d-3) assumes a smooth surface of bidegree (d, e)");
  }
};

struct PointFlags {
  std::string height = "0";
  std::string dp;
  std::optional<unsigned> cover_genus;
  unsigned cover_degree = 1;

  void attach(CLI::App* app) {
    app->add_option("--height", height, "h(P), echoed in the report");
    auto* d = app->add_option("--dp", dp, "d(P); -2 for a section");
    auto* g = app->add_option("--cover-genus", cover_genus, "genus of the cover T");
    app->add_option("--cover-degree", cover_degree, "degree [T : B]");
    d->excludes(g);
  }

  PointData point() const {
    const Rational h = rational_arg("height", height);
    if (cover_genus) return PointData::on_cover(h, *cover_genus, cover_degree);
    if (dp.empty()) return PointData::section(h);
    PointData p = PointData::section(h);
    p.discriminant = rational_arg("dp", dp);
    return p;
  }
};

struct TanPlane {
  Invariants family;
  std::optional<unsigned> d;

  void attach(CLI::App* app) {
    family.attach(app);
    app->add_option("--d", d, "degree of the plane curves");
  }

  void operator()(Report& r, const Assumptions& a) const {
    if (family.poly.given()) {
      const FamilyInvariants inv = family.compute(r);
      r.results["invariants"] = invariants_json(inv);
      const json keep = r.inputs;
      fill_bound(r, tan_plane_bound(inv, a));
      for (const auto& [key, v] : keep.items()) r.inputs[key] = v;
      return;
    }
    if (!d || !family.s || !family.k)
      throw Error(ErrorCode::invalid_argument, "give --poly or --file, or all of --d, --s, --k");
    fill_bound(r, tan_plane_bound(*d, *family.s, *family.k, a));
  }
};

struct TanGeneral {
  PointFlags point;
  unsigned g = 0, s = 0;
  std::string omega2;

  void attach(CLI::App* app) {
    point.attach(app);
    app->add_option("--g", g, "fiber genus")->required();
    app->add_option("--s", s, "number of singular fibers")->required();
    app->add_option("--omega2", omega2, "omega^2 of the relative dualizing sheaf")->required();
  }

  void operator()(Report& r, const Assumptions& a) const {
    fill_bound(r, tan_general_bound(g, point.point(), s, rational_arg("omega2", omega2), a));
  }
};

struct Moriwaki {
  PointFlags point;
  std::string c1sq, c2;
  unsigned g_B = 0;

  void attach(CLI::App* app) {
    point.attach(app);
    app->add_option("--c1sq", c1sq, "c1^2 of the surface")->required();
    app->add_option("--c2", c2, "c2 of the surface")->required();
    app->add_option("--gB", g_B, "genus of the base")->required();
  }

  void operator()(Report& r, const Assumptions& a) const {
    fill_bound(r, moriwaki_bound(point.point(), rational_arg("c1sq", c1sq), rational_arg("c2", c2),
                                 g_B, a));
  }
};

struct Vojta {
  PointFlags point;
  std::string epsilon, constant;

  void attach(CLI::App* app) {
    point.attach(app);
    app->add_option("--epsilon", epsilon, "positive epsilon")->required();
    app->add_option("--constant", constant, "the O(1) constant")->required();
  }

  void operator()(Report& r, const Assumptions&) const {
    fill_bound(r, vojta_bound(point.point(), rational_arg("epsilon", epsilon),
                              rational_arg("constant", constant)));
  }
};

struct CharP {
  PointFlags point;
  unsigned g = 0, e = 0;
  std::uint64_t p = 0;

  void attach(CLI::App* app) {
    point.attach(app);
    app->add_option("--g", g, "fiber genus")->required();
    app->add_option("--p", p, "the characteristic")->required();
    app->add_option("--e", e, "inseparability exponent")->required();
  }

  void operator()(Report& r, const Assumptions& a) const {
    fill_bound(r, char_p_bound(point.point(), g, p, e, a));
  }
};

struct Inseparable {
  unsigned g_B = 0, s = 0;

  void attach(CLI::App* app) {
    app->add_option("--gB", g_B, "genus of the base")->required();
    app->add_option("--s", s, "number of singular fibers")->required();
  }

  void operator()(Report& r, const Assumptions& a) const { fill_bound(r, inseparable_bound(g_B, s, a)); }
};

struct Search {
  PolySource poly;
  unsigned n = 1;
  std::string mode = "polynomial";
  double time_limit = 60;

  void attach(CLI::App* app) {
    poly.attach(app);
    app->add_option("--N", n, "height bound")->required();
    app->add_option("--mode", mode, "polynomial (r = 1) or rational")
        ->check(CLI::IsMember({"polynomial", "rational"}));
    app->add_option("--time-limit", time_limit, "seconds before giving up; 0 for none")
        ->check(CLI::NonNegativeNumber);
  }

  void operator()(Report& r) const {
    const std::string text = poly.read();
    r.inputs["poly"] = text;
    r.inputs["N"] = n;
    r.inputs["mode"] = mode;
    GroebnerOptions options;
    if (time_limit > 0)
      options.deadline = std::chrono::steady_clock::now() +
                         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(time_limit));
    const QPoly f = parse_qpoly(text);
    const auto found = search_ff_solutions(
        f, n, mode == "rational" ? SearchMode::rational : SearchMode::polynomial, options);
    json list = json::array();
    for (const auto& pt : found.points) {
      json j = point_json(pt);
      j["verified"] = verify_ff_solution(f, pt);
      list.push_back(j);
    }
    r.results["count"] = found.points.size();
    r.results["points"] = list;
    r.results["unresolved_branches"] = found.unresolved_branches;
    r.results["systems"] = found.systems;
    if (found.unresolved_branches)
      r.caveats.push_back("coefficient solutions with irrational coordinates are counted, not returned");
  }
};

SurfaceNumbers family_numbers(const std::optional<unsigned>& g, const std::optional<unsigned>& g_B,
                              const std::string& omega2, const std::string& delta,
                              const std::string& lambda = {}) {
  SurfaceNumbers n;
  n.g = g;
  n.g_B = g_B;
  if (!omega2.empty()) n.omega_sq = rational_arg("omega2", omega2);
  if (!delta.empty()) n.delta = rational_arg("delta", delta);
  if (!lambda.empty()) n.lambda = rational_arg("lambda", lambda);
  return n;
}

void echo_numbers(Report& r, const SurfaceNumbers& n) {
  if (n.g) r.inputs["g"] = *n.g;
  if (n.g_B) r.inputs["gB"] = *n.g_B;
  if (n.lambda) r.inputs["lambda"] = exact(*n.lambda);
  if (n.omega_sq) r.inputs["omega2"] = exact(*n.omega_sq);
  if (n.delta) r.inputs["delta"] = exact(*n.delta);
}

struct FamilyCheck {
  std::optional<unsigned> g, g_B;
  std::string omega2, delta, lambda, o_term;
  bool stable = false;
  std::function<CheckResult(const SurfaceNumbers&, const FamilyCheck&)> check;

  enum Field : unsigned { kLambda = 1, kGenus = 2, kBase = 4, kOTerm = 8, kStable = 16 };

  /// Flags in `required` must be given; genus flags in `optional` may be.
  void attach(CLI::App* app, unsigned required, unsigned optional = 0) {
    const unsigned all = required | optional;
    auto need = [&](CLI::Option* o, Field f) {
      if (required & f) o->required();
    };
    if (all & kLambda) need(app->add_option("--lambda", lambda, "degree of the Hodge bundle"), kLambda);
    if (all & kGenus) need(app->add_option("--g", g, "fiber genus"), kGenus);
    if (all & kBase) need(app->add_option("--gB", g_B, "genus of the base"), kBase);
    app->add_option("--omega2", omega2, "omega^2")->required();
    app->add_option("--delta", delta, "degree of the discriminant")->required();
    if (all & kOTerm) need(app->add_option("--o-term", o_term, "value of the o(1/g) term"), kOTerm);
    if (all & kStable) app->add_flag("--stable", stable, "assert the family is stable");
  }

  void operator()(Report& r) const {
    const SurfaceNumbers n = family_numbers(g, g_B, omega2, delta, lambda);
    echo_numbers(r, n);
    if (!o_term.empty()) r.inputs["o_term"] = exact(rational_arg("o-term", o_term));
    if (stable) r.inputs["stable"] = true;
    fill_check(r.results, r, check(n, *this));
  }
};

struct Geography {
  std::string c1sq, c2;

  void attach(CLI::App* app) {
    app->add_option("--c1sq", c1sq, "c1^2")->required();
    app->add_option("--c2", c2, "c2")->required();
  }

  void operator()(Report& r) const {
    const Integer a = integer_arg("c1sq", c1sq), b = integer_arg("c2", c2);
    r.inputs["c1sq"] = exact(a);
    r.inputs["c2"] = exact(b);
    json rules = json::array();
    bool all = true;
    for (const auto& c : check_surface_geography(a, b)) {
      json j;
      fill_check(j, r, c);
      rules.push_back(j);
      all = all && c.holds;
    }
    r.results["all_hold"] = all;
    r.results["rules"] = rules;
  }
};

struct LogMy {
  unsigned g = 0, g_B = 0, s = 0;
  std::string omega2, omega_dot_p;

  void attach(CLI::App* app) {
    app->add_option("--g", g, "fiber genus")->required();
    app->add_option("--gB", g_B, "genus of the base")->required();
    app->add_option("--s", s, "number of singular fibers")->required();
    app->add_option("--omega2", omega2, "omega^2")->required();
    app->add_option("--omega-dot-p", omega_dot_p, "<omega . P>")->required();
  }

  void operator()(Report& r) const {
    const Rational w = rational_arg("omega2", omega2), wp = rational_arg("omega-dot-p", omega_dot_p);
    r.inputs["g"] = g;
    r.inputs["gB"] = g_B;
    r.inputs["s"] = s;
    r.inputs["omega2"] = exact(w);
    r.inputs["omega_dot_p"] = exact(wp);
    const auto m = log_my_identity(g, g_B, s, w, wp);
    r.results["c1_sq_log"] = exact(m.c1_sq_log);
    r.results["c2_log"] = exact(m.c2_log);
    r.results["tan_bound_rhs"] = exact(m.tan_bound_rhs);
    r.results["identity_holds"] = m.identity_holds;
    r.results["my_holds"] = m.my_holds;
    r.results["derivation_bound"] = exact(m.derivation_bound);
    r.results["statement_bound"] = exact(m.statement_bound);
    r.results["discrepancy"] = exact(m.discrepancy);
    const auto adj = adjunction_height(wp);
    r.results["p_sq"] = exact(adj.p_sq);
    r.results["height_contribution"] = exact(adj.contribution);
    if (sgn(m.discrepancy) != 0)
      r.caveats.push_back("the stated bound uses 3s where the derivation gives s");
  }
};

/// Largest table geography-region will emit.
constexpr std::int64_t kMaxRegionRows = 4'000'000;

struct Region {
  std::int64_t c1_lo = 0, c1_hi = 0, c2_lo = 0, c2_hi = 0;
  void attach(CLI::App* app) {
    app->add_option("--c1sq-min", c1_lo, "smallest c1^2")->required();
    app->add_option("--c1sq-max", c1_hi, "largest c1^2")->required();
    app->add_option("--c2-min", c2_lo, "smallest c2")->required();
    app->add_option("--c2-max", c2_hi, "largest c2")->required();
  }

  void operator()(Report& r) const {
    r.inputs["c1sq_min"] = c1_lo;
    r.inputs["c1sq_max"] = c1_hi;
    r.inputs["c2_min"] = c2_lo;
    r.inputs["c2_max"] = c2_hi;
    const IntRange a{c1_lo, c1_hi}, b{c2_lo, c2_hi};
    if (a.size() > 0 && b.size() > kMaxRegionRows / a.size())
      throw Error(ErrorCode::resource_limit,
                  "region exceeds " + std::to_string(kMaxRegionRows) + " lattice points");
    const auto rows = geography_region(a, b);
    json columns = json::array({"c1_sq", "c2"});
    for (const char* id : kGeographyRuleIds) columns.push_back(id);
    std::ostringstream csv;
    for (std::size_t i = 0; i < columns.size(); ++i)
      csv << (i ? "," : "") << columns[i].get<std::string>();
    csv << "\n";
    json table = json::array();
    for (const auto& row : rows) {
      csv << row.c1_sq << "," << row.c2;
      json line = json::array({row.c1_sq, row.c2});
      for (bool h : row.holds) {
        csv << "," << (h ? 1 : 0);
        line.push_back(h ? 1 : 0);
      }
      csv << "\n";
      table.push_back(line);
    }
    r.results["columns"] = columns;
    r.results["rows"] = table;
    r.text_body = csv.str();
  }
};

struct Twist {
  PolySource poly;
  std::uint64_t p = 0;
  unsigned n = 1;
  std::string point;
  std::vector<std::string> prior;

  void attach(CLI::App* app) {
    poly.attach(app);
    app->add_option("--p", p, "the prime")->required();
    app->add_option("--n", n, "number of Frobenius twists");
    app->add_option("--point", point, "solution 'p, q, r' of f to twist along");
    app->add_option("--prior", prior, "earlier solutions 'p, q, r' for the novelty test");
  }

  void operator()(Report& r) const {
    const std::string text = poly.read();
    r.inputs["poly"] = text;
    r.inputs["p"] = p;
    r.inputs["n"] = n;
    const PrimeField field(p);
    const auto f = parse_poly(text, family_ring(), field).poly;
    const auto twisted = frobenius_twist(f, n);
    r.results["twisted"] = twisted.to_string();
    if (point.empty()) return;
    const FpPoint pt = parse_fp_point(point, field);
    r.inputs["point"] = point;
    const FpPoint moved = twist_solution(pt, n);
    r.results["point_solves_f"] = verify_ff_solution(f, pt);
    r.results["twisted_point"] = point_json(moved);
    r.results["twisted_point_solves_twisted_f"] = verify_ff_solution(twisted, moved);
    if (!prior.empty()) {
      std::vector<FpPoint> earlier;
      for (const auto& s : prior) earlier.push_back(parse_fp_point(s, field));
      r.inputs["prior"] = prior;
      r.results["twisted_point_is_new"] = is_new_solution(moved, earlier);
    }
  }
};

std::vector<std::string> split_flags(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(' '), e = item.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

void emit(std::ostream& out, const Report& r, const std::string& format) {
  if (format == "structured")
    out << r.to_json().dump(2) << "\n";
  else
    render_text(out, r);
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for Diophantine equations over Q and Q(t)", "dioph"};
  app.require_subcommand(1);
  Globals globals;
  add_globals(&app, globals);

  std::vector<std::pair<CLI::App*, Action>> actions;
  Assumptions assumed;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };

  SolveInteger solve_integer;
  Taxicab taxicab;
  Invariants invariants;
  TanPlane tan_plane;
  TanGeneral tan_general;
  Moriwaki moriwaki;
  Vojta vojta;
  CharP char_p;
  Inseparable inseparable;
  Search search;
  FamilyCheck noether, chx, my, noether_ineq, ehm;
  Geography geography;
  LogMy log_my;
  Region region;
  Twist twist;

  auto* s = leaf(&app, "solve-integer", "integer solutions of x^3 + y^3 = m");
  solve_integer.attach(s);
  actions.push_back({s, std::cref(solve_integer)});
  s = leaf(&app, "taxicab", "smallest sum of two cubes in two ways");
  taxicab.attach(s);
  actions.push_back({s, std::cref(taxicab)});
  s = leaf(&app, "invariants", "d, e, g, s, k and omega^2 of a family f(x, y, t)");
  invariants.attach(s);
  actions.push_back({s, std::cref(invariants)});

  auto* bound = app.add_subcommand("bound", "height bounds");
  bound->require_subcommand(1);
  bound->fallthrough();
  auto with_assumptions = [&](auto& handler) {
    return [&handler, &assumed](Report& r) { handler(r, assumed); };
  };
  s = leaf(bound, "tan-plane", "plane families of degree d >= 4");
  tan_plane.attach(s);
  actions.push_back({s, with_assumptions(tan_plane)});
  s = leaf(bound, "tan-general", "general fibrations of genus g >= 2");
  tan_general.attach(s);
  actions.push_back({s, with_assumptions(tan_general)});
  s = leaf(bound, "moriwaki", "needs ks-full-rank asserted");
  moriwaki.attach(s);
  actions.push_back({s, with_assumptions(moriwaki)});
  s = leaf(bound, "vojta", "(2 + epsilon) d(P) + C");
  vojta.attach(s);
  actions.push_back({s, with_assumptions(vojta)});
  s = leaf(bound, "char-p", "leading term in characteristic p");
  char_p.attach(s);
  actions.push_back({s, with_assumptions(char_p)});
  s = leaf(bound, "inseparable", "purely inseparable points");
  inseparable.attach(s);
  actions.push_back({s, with_assumptions(inseparable)});

  s = leaf(&app, "search", "Q(t)-points of bounded height");
  search.attach(s);
  actions.push_back({s, std::cref(search)});

  auto* check = app.add_subcommand("check", "inequalities and identities between invariants");
  check->require_subcommand(1);
  check->fallthrough();
  s = leaf(check, "noether", "12 lambda = omega^2 + delta");
  noether.attach(s, FamilyCheck::kLambda);
  noether.check = [](const SurfaceNumbers& n, const FamilyCheck&) { return check_noether_formula(n); };
  actions.push_back({s, std::cref(noether)});
  s = leaf(check, "chx", "(1 - 1/g) delta <= (2 + 1/g) omega^2");
  chx.attach(s, FamilyCheck::kGenus, FamilyCheck::kStable);
  chx.check = [](const SurfaceNumbers& n, const FamilyCheck& c) { return check_chx(n, c.stable); };
  actions.push_back({s, std::cref(chx)});
  s = leaf(check, "my", "omega^2 <= (2g-2)(2g_B-2) + 3 delta");
  my.attach(s, FamilyCheck::kGenus | FamilyCheck::kBase);
  my.check = [](const SurfaceNumbers& n, const FamilyCheck&) { return check_my_family(n); };
  actions.push_back({s, std::cref(my)});
  s = leaf(check, "noether-ineq", "delta <= 5 omega^2 + 9(2g-2)(2g_B-2) + 36");
  noether_ineq.attach(s, FamilyCheck::kGenus | FamilyCheck::kBase);
  noether_ineq.check = [](const SurfaceNumbers& n, const FamilyCheck&) {
    return check_noether_inequality_family(n);
  };
  actions.push_back({s, std::cref(noether_ineq)});
  s = leaf(check, "ehm", "delta <= (1 + o-term) omega^2");
  ehm.attach(s, FamilyCheck::kOTerm, FamilyCheck::kGenus);
  ehm.check = [](const SurfaceNumbers& n, const FamilyCheck& c) {
    return check_ehm(n, rational_arg("o-term", c.o_term));
  };
  actions.push_back({s, std::cref(ehm)});
  s = leaf(check, "geography", "surface geography rules for (c1^2, c2)");
  geography.attach(s);
  actions.push_back({s, std::cref(geography)});
  s = leaf(check, "log-my", "logarithmic Miyaoka-Yau and the height it gives");
  log_my.attach(s);
  actions.push_back({s, std::cref(log_my)});

  s = leaf(&app, "geography-region", "geography rules over a lattice box, as CSV");
  region.attach(s);
  actions.push_back({s, std::cref(region)});
  s = leaf(&app, "twist", "Frobenius twists over F_p(t)");
  twist.attach(s);
  actions.push_back({s, std::cref(twist)});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kOk;
    if (globals.format == "structured") {
      Report r;
      r.error = {"usage", e.what()};
      out << r.to_json().dump(2) << "\n";
    }
    return kUsageError;
  }

  Report report;
  std::vector<std::string> path;
  const CLI::App* node = &app;
  while (!node->get_subcommands().empty()) {
    node = node->get_subcommands().front();
    path.push_back(node->get_name());
  }
  for (std::size_t i = 0; i < path.size(); ++i) report.command += (i ? " " : "") + path[i];

  globals.asserted = split_flags(globals.assert_flags);
  for (const auto& f : globals.asserted)
    if (std::find(kAssertionNames.begin(), kAssertionNames.end(), f) == kAssertionNames.end()) {
      err << "usage error: unknown assertion flag '" << f << "'\n";
      return kUsageError;
    }
  assumed = assumptions_from(globals.asserted);
  report.assumptions = assumptions_json(assumed);

  for (const auto& [sub, action] : actions) {
    if (!sub->parsed()) continue;
    try {
      action(report);
    } catch (const Error& e) {
      report.error = {std::string(error_code_name(e.code())), e.what()};
    }
    break;
  }
  emit(out, report, globals.format);
  if (report.error) {
    err << "error: " << report.error->second << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace dioph::cli
