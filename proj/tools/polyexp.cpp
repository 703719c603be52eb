// polyexp command line front end. JSON reports go to stdout, diagnostics to
// stderr. Exit status: 0 success, 1 input error, 2 internal failure.

#include <filesystem>
#include <map>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polyexp/apps.hpp"
#include "polyexp/curves.hpp"
#include "polyexp/errors.hpp"
#include "polyexp/grid.hpp"
#include "polyexp/parse.hpp"
#include "polyexp/report.hpp"
#include "polyexp/structure.hpp"
#include "polyexp/verify.hpp"

using namespace polyexp;
using report::Json;
using report::to_json;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw InputError(what + ": expected an integer, got \"" + s + "\"");
  }
}

// arith:start:step:n  geom:start:ratio:n  rand:seed:n  list:v1,v2,...  file:path
SetSpec parse_set_arg(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) throw InputError("set spec \"" + arg + "\": missing kind prefix");
  const std::string kind = arg.substr(0, colon), rest = arg.substr(colon + 1);
  if (kind == "file") {
    const Json j = parse_json(read_file(rest), rest);
    if (j.is_array()) return report::set_spec_from_json(Json{{"kind", "explicit"}, {"values", j}});
    return report::set_spec_from_json(j);
  }
  if (kind == "list") {
    std::vector<Rational> values;
    for (const std::string& v : split(rest, ',')) values.push_back(Rational::parse(v));
    return SetSpec::explicit_list(std::move(values));
  }
  const auto parts = split(rest, ':');
  if (kind == "arith" && parts.size() == 3)
    return SetSpec::arithmetic(Rational::parse(parts[0]), Rational::parse(parts[1]), to_int(parts[2], arg));
  if (kind == "geom" && parts.size() == 3)
    return SetSpec::geometric(Rational::parse(parts[0]), Rational::parse(parts[1]), to_int(parts[2], arg));
  if (kind == "rand" && parts.size() == 2)
    return SetSpec::random(static_cast<std::uint64_t>(to_int(parts[0], arg)), to_int(parts[1], arg));
  throw InputError("set spec \"" + arg + "\": expected arith:start:step:n, geom:start:ratio:n, rand:seed:n, "
                   "list:v1,v2,... or file:path");
}

// Growth families take the set syntax without n, or a bare kind name.
SetSpec parse_family_arg(const std::string& arg, std::uint64_t seed) {
  if (arg == "arith") return SetSpec::arithmetic(0, 1, 0);
  if (arg == "geom") return SetSpec::geometric(1, 2, 0);
  if (arg == "rand") return SetSpec::random(seed, 0);
  return parse_set_arg(arg + ":0");
}

ParamCurve parse_curve_arg(const std::string& arg) {
  ParamCurve c;
  if (!arg.empty() && (arg.front() == '{' || arg.rfind("file:", 0) == 0)) {
    const Json j = arg.front() == '{' ? parse_json(arg, "curve") : parse_json(read_file(arg.substr(5)), arg);
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
      throw InputError("curve: expected {\"coords\": [...]}");
    for (const Json& x : j.at("coords")) {
      if (!x.is_string()) throw InputError("curve: coordinates must be strings");
      c.coords.push_back(parse_uni(x.get<std::string>()));
    }
  } else {
    for (const std::string& x : split(arg, ',')) c.coords.push_back(parse_uni(x));
  }
  c.validate();
  return c;
}

std::vector<int> parse_schedule(const std::string& arg) {
  std::vector<int> out;
  for (const std::string& s : split(arg, ',')) out.push_back(to_int(s, "schedule"));
  return out;
}

FamilyKind parse_kind(const std::string& s) {
  if (s == "standard") return FamilyKind::standard;
  if (s == "dual") return FamilyKind::dual;
  if (s == "projected") return FamilyKind::projected;
  throw InputError("unknown curve family kind \"" + s + "\"");
}

Json set_json(const SetSpec& spec, const RationalSet& values) {
  return {{"spec", to_json(spec)}, {"values", to_json(values)}};
}

// --- schemas ---------------------------------------------------------------

const char* const kSchemaCommon = R"("command": {"type": "string"}, "seed": {"type": "integer"}, "input": {"type": "object"})";

Json schema_for(const std::string& command) {
  static const std::map<std::string, std::string> bodies = {
      {"analyze", R"("special_form": {"type": "object", "properties": {"kind": {"enum": ["additive", "multiplicative", "degenerate-u", "degenerate-v", "none"]}, "h": {"type": ["string", "null"], "description": "polynomial in w"}, "phi": {"type": ["string", "null"], "description": "polynomial in u"}, "psi": {"type": ["string", "null"], "description": "polynomial in v"}}},
        "skew_form": {"type": ["object", "null"], "properties": {"p": {"type": "string"}, "q": {"type": "string"}, "r": {"type": "string"}}},
        "associated_h": {"type": ["object", "null"], "properties": {"case": {"enum": ["additive", "multiplicative", "degenerate"]}, "h": {"type": "string"}, "k": {"type": ["integer", "null"]}, "ell": {"type": ["integer", "null"]}, "e": {"type": ["integer", "null"]}, "e_prime": {"type": ["integer", "null"]}}},
        "decomposition": {"type": ["object", "null"], "properties": {"outer": {"type": "string"}, "inner": {"type": "string"}}},
        "stein": {"type": ["object", "null"], "properties": {"degree": {"type": "integer"}, "sample": {"type": "array"}, "reducible_lambdas": {"type": "array"}, "reducible_count": {"type": "integer"}}})"},
      {"grid", R"("sets": {"type": "object", "description": "A, B, C each with spec and values"},
        "trim": {"type": ["object", "null"], "properties": {"A": {"type": "array"}, "C": {"type": "array"}, "removed_A": {"type": "array"}, "removed_C": {"type": "array"}}},
        "grid": {"type": "object", "properties": {"M": {"type": "integer"}, "Q": {"type": "integer"}, "image_size": {"type": "integer"}, "sizes": {"type": "object"}, "fibers_by_c": {"type": "array"}, "fibers_by_b": {"type": "array"}}},
        "cs_check": {"type": "object", "properties": {"ok": {"type": "boolean"}, "slack_c": {"type": "integer"}, "slack_b": {"type": "integer"}}})"},
      {"growth", R"("family": {"type": "object"},
        "growth": {"type": "object", "properties": {"measure": {"enum": ["image", "m_over_image"]}, "schedule": {"type": "array"}, "measurements": {"type": "array", "items": {"type": "object", "properties": {"n": {"type": "integer"}, "value": {"type": "integer"}}}}, "fitted_exponent": {"type": "number"}}},
        "csv": {"description": "with --format csv the output is the table n,value instead of JSON"})"},
      {"curves", R"("components": {"type": "object", "properties": {"kind": {"enum": ["standard", "dual", "projected"]}, "thresholds": {"type": "object"}, "threshold": {"type": "integer"}, "components": {"type": "array", "items": {"type": "object", "properties": {"component": {"type": "string"}, "multiplicity": {"type": "integer"}, "popular": {"type": "boolean"}, "members": {"type": "array"}}}}}},
        "incidences": {"type": "object", "properties": {"I": {"type": "integer"}, "per_point": {"type": "array"}, "per_member": {"type": "array"}}})"},
      {"apps slopes", R"("directions": {"type": "integer"}, "slope_poly": {"type": "string"}, "bridge": {"type": ["object", "null"]})"},
      {"apps distances", R"("distinct_distances": {"type": "integer"}, "is_line": {"type": "boolean"}, "dist_poly": {"type": "string"}, "bridge": {"type": "object"})"},
      {"apps sumproduct", R"("sum_product": {"type": "object", "properties": {"size_A": {"type": "integer"}, "sum": {"type": "integer"}, "difference": {"type": "integer"}, "product": {"type": "integer"}, "f_image": {"type": ["integer", "null"]}}})"},
      {"selftest", R"("suites": {"type": "array", "items": {"type": "object", "properties": {"id": {"type": "integer"}, "name": {"type": "string"}, "passed": {"type": "boolean"}, "detail": {"type": "string"}}}}, "passed": {"type": "boolean"})"},
  };
  const std::string text = std::string(R"({"$schema": "https://json-schema.org/draft/2020-12/schema", "title": "polyexp )") +
                           command + R"(", "type": "object", "properties": {)" + kSchemaCommon + ", " +
                           bodies.at(command) + "}}";
  return Json::parse(text);
}

// --- commands --------------------------------------------------------------

struct Common {
  std::uint64_t seed = verify::kDefaultSeed;
  bool schema = false;
  FactorConfig caps;
};

Json header(const std::string& command, const Common& c) {
  Json j;
  j["command"] = command;
  j["seed"] = c.seed;
  return j;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

BiPoly require_poly(const std::string& text, const char* what) {
  if (text.empty()) throw InputError(std::string("missing ") + what);
  return parse_poly(text);
}

void check_caps(const FactorConfig& caps) {
  const FactorConfig limits;
  if (caps.bi_degree_cap < 1 || caps.bi_degree_cap > limits.bi_degree_cap || caps.uni_degree_cap < 1 ||
      caps.uni_degree_cap > limits.uni_degree_cap)
    throw InputError("degree caps must lie within the factorization limits (" +
                     std::to_string(limits.bi_degree_cap) + ", " + std::to_string(limits.uni_degree_cap) + ")");
}

int run_analyze(const Common& c, const std::string& text) {
  const BiPoly f = require_poly(text, "polynomial");
  Json j = header("analyze", c);
  j["input"] = {{"f", f.to_string()}};
  j["special_form"] = to_json(detect_special(f, c.caps));
  j["skew_form"] = to_json(detect_skew_form(f));
  const bool both = f.depends_on(Var::u) && f.depends_on(Var::v);
  j["associated_h"] = both ? to_json(associated_h(f)) : Json(nullptr);
  Rng rng(c.seed);
  j["decomposition"] = f.total_degree() >= 2 ? to_json(bi_decompose(f, rng, c.caps)) : Json(nullptr);
  j["stein"] = f.total_degree() >= 1 ? to_json(stein_count(f, stein_default_sample(f.total_degree()), c.caps))
                                     : Json(nullptr);
  emit(j);
  return 0;
}

int run_grid(const Common& c, const std::string& text, const std::string& a_arg, const std::string& b_arg,
             const std::string& c_arg, bool trim) {
  const BiPoly f = require_poly(text, "polynomial");
  if (a_arg.empty() || b_arg.empty() || c_arg.empty()) throw InputError("grid needs --A, --B and --C");
  const SetSpec sa = parse_set_arg(a_arg), sb = parse_set_arg(b_arg), sc = parse_set_arg(c_arg);
  RationalSet a = gen_set(sa), b = gen_set(sb), cc = gen_set(sc);
  Json j = header("grid", c);
  j["input"] = {{"f", f.to_string()}};
  j["sets"] = {{"A", set_json(sa, a)}, {"B", set_json(sb, b)}, {"C", set_json(sc, cc)}};
  if (trim) {
    const TrimResult t = trim_degenerate(f, a, cc);
    a = t.a;
    cc = t.c;
    j["trim"] = to_json(t);
  } else {
    j["trim"] = nullptr;
  }
  const GridReport g = grid_report(f, a, b, cc);
  j["grid"] = to_json(g);
  j["cs_check"] = to_json(cs_check(g));
  emit(j);
  return 0;
}

int run_growth(const Common& c, const std::string& text, const std::string& family_arg,
               const std::string& schedule_arg, const std::string& measure, const std::string& format,
               const std::string& out_dir) {
  const BiPoly f = require_poly(text, "polynomial");
  const SetSpec family = parse_family_arg(family_arg, c.seed);
  const std::vector<int> schedule = schedule_arg.empty() ? default_growth_schedule() : parse_schedule(schedule_arg);
  GrowthMeasure m = GrowthMeasure::image_size;
  if (measure == "m_over_image") {
    m = GrowthMeasure::m_over_image;
  } else if (measure != "image") {
    throw InputError("unknown measure \"" + measure + "\"");
  }
  const GrowthFit fit = growth_fit(f, family, schedule, m);
  Json j = header("growth", c);
  j["input"] = {{"f", f.to_string()}};
  j["family"] = to_json(family);
  j["growth"] = to_json(fit);
  const std::string csv = report::growth_csv(fit);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / "growth.csv", std::ios::binary) << csv;
    std::ofstream(std::filesystem::path(out_dir) / "growth.json", std::ios::binary) << j.dump(2) << '\n';
  }
  if (format == "csv") {
    std::cout << csv;
  } else if (format == "json") {
    emit(j);
  } else {
    throw InputError("unknown format \"" + format + "\"");
  }
  return 0;
}

int run_curves(const Common& c, const std::string& text, const std::string& kind_arg, const std::string& first_arg,
               const std::string& second_arg, const std::string& px_arg, const std::string& py_arg) {
  const BiPoly f = require_poly(text, "polynomial");
  if (first_arg.empty() || second_arg.empty()) throw InputError("curves needs --first and --second");
  const FamilyKind kind = parse_kind(kind_arg);
  const SetSpec s1 = parse_set_arg(first_arg), s2 = parse_set_arg(second_arg);
  const RationalSet first = gen_set(s1), second = gen_set(s2);
  const SetSpec spx = px_arg.empty() ? s1 : parse_set_arg(px_arg), spy = py_arg.empty() ? s2 : parse_set_arg(py_arg);
  const RationalSet px = gen_set(spx), py = gen_set(spy);
  std::vector<Point> points;
  for (const auto& [x, y] : product_pairs(px, py)) points.emplace_back(x, y);

  const CurveFamily fam = make_family(f, kind, product_pairs(first, second));
  Json j = header("curves", c);
  j["input"] = {{"f", f.to_string()}, {"kind", to_string(kind)}};
  j["sets"] = {{"first", set_json(s1, first)},
               {"second", set_json(s2, second)},
               {"points_x", set_json(spx, px)},
               {"points_y", set_json(spy, py)}};
  j["components"] = to_json(shared_components(fam, c.caps), fam);
  j["incidences"] = to_json(incidence_count(points, fam, c.caps));
  emit(j);
  return 0;
}

int run_slopes(const Common& c, const std::string& text, const std::string& xs_arg) {
  if (text.empty() || xs_arg.empty()) throw InputError("apps slopes needs --f and --xs");
  const UniPoly f = parse_uni(text);
  const SetSpec sx = parse_set_arg(xs_arg);
  const RationalSet xs = gen_set(sx);
  PointSet2D pts;
  for (const Rational& x : xs) pts.emplace_back(x, f.eval(x));
  Json j = header("apps slopes", c);
  j["input"] = {{"f", f.to_string("x")}};
  j["sets"] = {{"xs", set_json(sx, xs)}};
  j["directions"] = directions_count(pts);
  j["slope_poly"] = slope_poly(f).to_string(kXY);
  j["bridge"] = f.degree() >= 3 ? to_json(special_form_bridge_slope(f, c.caps)) : Json(nullptr);
  emit(j);
  return 0;
}

int run_distances(const Common& c, const std::string& curve_arg, const std::string& params_arg) {
  if (curve_arg.empty() || params_arg.empty()) throw InputError("apps distances needs --curve and --params");
  const ParamCurve curve = parse_curve_arg(curve_arg);
  const SetSpec sp = parse_set_arg(params_arg);
  const RationalSet params = gen_set(sp);
  Json coords = Json::array();
  for (const UniPoly& x : curve.coords) coords.push_back(x.to_string("t"));
  Json j = header("apps distances", c);
  j["input"] = {{"curve", {{"coords", coords}}}};
  j["sets"] = {{"params", set_json(sp, params)}};
  j["distinct_distances"] = distinct_distances_count(curve, params);
  j["is_line"] = is_line_param(curve);
  j["dist_poly"] = dist_poly(curve).to_string(kTS);
  j["bridge"] = to_json(special_form_bridge_distance(curve, c.caps));
  emit(j);
  return 0;
}

int run_sumproduct(const Common& c, const std::string& a_arg, const std::string& f_text) {
  if (a_arg.empty()) throw InputError("apps sumproduct needs --A");
  const SetSpec sa = parse_set_arg(a_arg);
  const RationalSet a = gen_set(sa);
  std::optional<BiPoly> f;
  if (!f_text.empty()) f = parse_poly(f_text);
  Json j = header("apps sumproduct", c);
  j["input"] = {{"f", f ? Json(f->to_string()) : Json(nullptr)}};
  j["sets"] = {{"A", set_json(sa, a)}};
  j["sum_product"] = to_json(sum_product_report(a, f));
  emit(j);
  return 0;
}

int run_selftest(const Common& c, int only) {
  if (only < 0 || only > verify::kSuiteCount) throw InputError("--only must lie in 1.." + std::to_string(verify::kSuiteCount));
  Json j = header("selftest", c);
  j["input"] = Json::object();
  Json suites = Json::array();
  bool all = true;
  for (int id = 1; id <= verify::kSuiteCount; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = verify::run_suite(id, c.seed);
    std::cerr << verify::format_line(r) << std::endl;
    suites.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    all = all && r.passed;
  }
  j["suites"] = suites;
  j["passed"] = all;
  emit(j);
  return all ? 0 : 2;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "random seed (recorded in the report)");
  sub->add_flag("--schema", c.schema, "print the output JSON schema and exit");
  sub->add_option("--bi-cap", c.caps.bi_degree_cap, "bivariate factorization degree cap");
  sub->add_option("--uni-cap", c.caps.uni_degree_cap, "univariate factorization degree cap");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact special-form detection and grid expansion experiments"};
  app.require_subcommand(1);
  Common common;
  std::string poly, a_arg, b_arg, c_arg, family = "arith", schedule, measure = "image", format = "csv", out_dir;
  std::string kind = "standard", first, second, px, py, f_opt, xs, curve, params;
  bool trim = false;
  int only = 0;

  auto* analyze = app.add_subcommand("analyze", "special form, skew form, associated h and Stein report");
  analyze->add_option("f", poly, "polynomial in u, v");
  add_common(analyze, common);

  auto* grid = app.add_subcommand("grid", "M, Q, image size and Cauchy-Schwarz check on A x B");
  grid->add_option("f", poly, "polynomial in u, v");
  grid->add_option("--A", a_arg, "set spec");
  grid->add_option("--B", b_arg, "set spec");
  grid->add_option("--C", c_arg, "set spec");
  grid->add_flag("--trim", trim, "trim degenerate A and C values first");
  add_common(grid, common);

  auto* growth = app.add_subcommand("growth", "growth measurements and fitted exponent");
  growth->add_option("f", poly, "polynomial in u, v");
  growth->add_option("--family", family, "arith, geom, rand, or a set spec without n")->capture_default_str();
  growth->add_option("--schedule", schedule, "comma separated sizes (default 8,16,32,64)");
  growth->add_option("--measure", measure, "image or m_over_image")->capture_default_str();
  growth->add_option("--format", format, "csv or json")->capture_default_str();
  growth->add_option("--out", out_dir, "directory for growth.csv and growth.json");
  add_common(growth, common);

  auto* curves = app.add_subcommand("curves", "shared components and incidences of a curve family");
  curves->add_option("f", poly, "polynomial in u, v");
  curves->add_option("--kind", kind, "standard, dual or projected")->capture_default_str();
  curves->add_option("--first", first, "set spec for the first parameter");
  curves->add_option("--second", second, "set spec for the second parameter");
  curves->add_option("--points-x", px, "set spec for point x coordinates (default --first)");
  curves->add_option("--points-y", py, "set spec for point y coordinates (default --second)");
  add_common(curves, common);

  auto* apps = app.add_subcommand("apps", "application reports");
  apps->require_subcommand(1);
  auto* slopes = apps->add_subcommand("slopes", "directions on the graph of f");
  slopes->add_option("--f", f_opt, "univariate polynomial in x");
  slopes->add_option("--xs", xs, "set spec for x coordinates");
  add_common(slopes, common);
  auto* distances = apps->add_subcommand("distances", "distances on a parametrized curve");
  distances->add_option("--curve", curve, "\"t,t^2\", {\"coords\": [...]} or file:path");
  distances->add_option("--params", params, "set spec for parameters");
  add_common(distances, common);
  auto* sumproduct = apps->add_subcommand("sumproduct", "|A+A|, |A-A|, |AA| and optionally |f(A,A)|");
  sumproduct->add_option("--A", a_arg, "set spec");
  sumproduct->add_option("--f", f_opt, "polynomial in u, v");
  add_common(sumproduct, common);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suites");
  selftest->add_option("--only", only, "run one suite (1-11)");
  add_common(selftest, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "polyexp: " << e.what() << '\n';
    return 1;
  }

  auto schema_name = [&]() -> std::string {
    if (*analyze) return "analyze";
    if (*grid) return "grid";
    if (*growth) return "growth";
    if (*curves) return "curves";
    if (*slopes) return "apps slopes";
    if (*distances) return "apps distances";
    if (*sumproduct) return "apps sumproduct";
    return "selftest";
  };

  try {
    check_caps(common.caps);
    if (common.schema) {
      emit(schema_for(schema_name()));
      return 0;
    }
    if (*analyze) return run_analyze(common, poly);
    if (*grid) return run_grid(common, poly, a_arg, b_arg, c_arg, trim);
    if (*growth) return run_growth(common, poly, family, schedule, measure, format, out_dir);
    if (*curves) return run_curves(common, poly, kind, first, second, px, py);
    if (*slopes) return run_slopes(common, f_opt, xs);
    if (*distances) return run_distances(common, curve, params);
    if (*sumproduct) return run_sumproduct(common, a_arg, f_opt);
    return run_selftest(common, only);
  } catch (const InputError& e) {
    std::cerr << "polyexp: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    std::cerr << "polyexp: internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "polyexp: internal error: " << e.what() << '\n';
    return 2;
  }
}
