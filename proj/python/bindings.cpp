// Thin pybind11 layer. Polynomials cross the boundary as text, rationals as
// "p/q" strings, and reports as the JSON text of polyexp::report, which the
// Python package decodes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyexp/apps.hpp"
#include "polyexp/curves.hpp"
#include "polyexp/errors.hpp"
#include "polyexp/factor.hpp"
#include "polyexp/grid.hpp"
#include "polyexp/parse.hpp"
#include "polyexp/report.hpp"
#include "polyexp/structure.hpp"
#include "polyexp/verify.hpp"

namespace py = pybind11;
using namespace polyexp;
using report::Json;
using report::to_json;

namespace {

RationalSet to_set(const std::vector<std::string>& values) {
  std::vector<Rational> out;
  for (const std::string& v : values) out.push_back(Rational::parse(v));
  return gen_set(SetSpec::explicit_list(std::move(out)));
}

ParamCurve to_curve(const std::vector<std::string>& coords) {
  ParamCurve c;
  for (const std::string& x : coords) c.coords.push_back(parse_uni(x));
  c.validate();
  return c;
}

FamilyKind to_kind(const std::string& s) {
  if (s == "standard") return FamilyKind::standard;
  if (s == "dual") return FamilyKind::dual;
  if (s == "projected") return FamilyKind::projected;
  throw InputError("unknown curve family kind \"" + s + "\"");
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_polyexp, m) {
  m.doc() = "exact special-form detection and grid expansion";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  m.def("canonical", [](const std::string& f) { return parse_poly(f).to_string(); });

  m.def("detect_special", [](const std::string& f) { return dump(to_json(detect_special(parse_poly(f)))); });
  m.def("detect_skew_form", [](const std::string& f) { return dump(to_json(detect_skew_form(parse_poly(f)))); });
  m.def("associated_h", [](const std::string& f) { return dump(to_json(associated_h(parse_poly(f)))); });
  m.def(
      "bi_decompose",
      [](const std::string& f, std::uint64_t seed) {
        Rng rng(seed);
        return dump(to_json(bi_decompose(parse_poly(f), rng)));
      },
      py::arg("f"), py::arg("seed") = verify::kDefaultSeed);
  m.def("stein_count", [](const std::string& f) {
    const BiPoly p = parse_poly(f);
    return dump(to_json(stein_count(p, stein_default_sample(p.total_degree()))));
  });
  m.def("separated_ratio", [](const std::string& f) { return dump(to_json(separated_ratio(parse_poly(f)))); });

  m.def("factor", [](const std::string& f) {
    const BiFactorization fz = bi_factor(parse_poly(f));
    std::vector<std::pair<std::string, int>> out;
    for (const auto& [p, k] : fz.factors) out.emplace_back(p.to_string(), k);
    return std::make_pair(fz.unit.to_string(), out);
  });

  m.def("grid_report", [](const std::string& f, const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const std::vector<std::string>& c) {
    const GridReport g = grid_report(parse_poly(f), to_set(a), to_set(b), to_set(c));
    Json j = to_json(g);
    j["cs_check"] = to_json(cs_check(g));
    return dump(j);
  });
  m.def("image", [](const std::string& f, const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    for (const Rational& r : image(parse_poly(f), to_set(a), to_set(b))) out.push_back(r.to_string());
    return out;
  });
  m.def("trim_degenerate", [](const std::string& f, const std::vector<std::string>& a,
                              const std::vector<std::string>& c) {
    return dump(to_json(trim_degenerate(parse_poly(f), to_set(a), to_set(c))));
  });
  m.def(
      "growth_fit",
      [](const std::string& f, const std::string& family_json, const std::vector<int>& schedule) {
        const SetSpec family = report::set_spec_from_json(Json::parse(family_json));
        return dump(to_json(growth_fit(parse_poly(f), family, schedule)));
      },
      py::arg("f"), py::arg("family_json"), py::arg("schedule") = default_growth_schedule());

  m.def("shared_components", [](const std::string& f, const std::string& kind, const std::vector<std::string>& first,
                                const std::vector<std::string>& second) {
    const CurveFamily fam = make_family(parse_poly(f), to_kind(kind), product_pairs(to_set(first), to_set(second)));
    return dump(to_json(shared_components(fam), fam));
  });

  m.def("slope_poly", [](const std::string& f) { return slope_poly(parse_uni(f)).to_string(kXY); });
  m.def("dist_poly", [](const std::vector<std::string>& coords) { return dist_poly(to_curve(coords)).to_string(kTS); });
  m.def("is_line_param", [](const std::vector<std::string>& coords) { return is_line_param(to_curve(coords)); });
  m.def("distinct_distances_count", [](const std::vector<std::string>& coords, const std::vector<std::string>& params) {
    std::vector<Rational> p;
    for (const std::string& s : params) p.push_back(Rational::parse(s));
    return distinct_distances_count(to_curve(coords), p);
  });
  m.def("sum_product", [](const std::vector<std::string>& a) { return dump(to_json(sum_product_report(to_set(a)))); });

  m.def(
      "run_suite",
      [](int id, std::uint64_t seed) {
        const verify::SuiteResult r = verify::run_suite(id, seed);
        return py::make_tuple(r.passed, verify::format_line(r));
      },
      py::arg("id"), py::arg("seed") = verify::kDefaultSeed);
  m.attr("suite_count") = verify::kSuiteCount;
}
