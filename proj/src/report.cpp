#include "polyexp/report.hpp"

#include <sstream>

#include "polyexp/errors.hpp"

namespace polyexp::report {

namespace {

Json index_or_null(int i) { return i < 0 ? Json(nullptr) : Json(i); }

Json poly_or_null(const UniPoly& p, const char* var, bool present) {
  return present ? Json(p.to_string(var)) : Json(nullptr);
}

Json fiber_list(const std::map<Rational, Count>& m) {
  Json out = Json::array();
  for (const auto& [x, n] : m) out.push_back({{"value", x.to_string()}, {"count", n}});
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalSet& s) {
  Json out = Json::array();
  for (const Rational& r : s) out.push_back(r.to_string());
  return out;
}

Json to_json(const SetSpec& spec) {
  Json j;
  j["kind"] = to_string(spec.kind);
  switch (spec.kind) {
    case SetSpec::Kind::explicit_list: j["values"] = to_json(spec.values); break;
    case SetSpec::Kind::arithmetic:
      j["start"] = spec.start.to_string();
      j["step"] = spec.step.to_string();
      break;
    case SetSpec::Kind::geometric:
      j["start"] = spec.start.to_string();
      j["ratio"] = spec.step.to_string();
      break;
    case SetSpec::Kind::random:
      j["seed"] = spec.seed;
      j["num_range"] = spec.num_range;
      j["den_range"] = spec.den_range;
      break;
  }
  j["n"] = spec.n;
  return j;
}

Json to_json(const SpecialForm& sf) {
  const bool present = sf.kind != SpecialKind::none;
  return {{"kind", to_string(sf.kind)},
          {"h", poly_or_null(sf.h, "w", present)},
          {"phi", poly_or_null(sf.phi, "u", present)},
          {"psi", poly_or_null(sf.psi, "v", present)}};
}

Json to_json(const std::optional<SkewForm>& sk) {
  if (!sk) return nullptr;
  return {{"p", sk->p.to_string("u")}, {"q", sk->q.to_string("v")}, {"r", sk->r.to_string("v")}};
}

Json to_json(const AssociatedH& ah) {
  return {{"case", to_string(ah.kind)},     {"h", ah.h.to_string()},
          {"k", index_or_null(ah.k)},       {"ell", index_or_null(ah.ell)},
          {"e", index_or_null(ah.e)},       {"e_prime", index_or_null(ah.e_prime)}};
}

Json to_json(const SteinReport& st) {
  return {{"degree", st.degree},
          {"sample", to_json(st.sample)},
          {"reducible_lambdas", to_json(st.reducible_lambdas)},
          {"reducible_count", st.reducible_lambdas.size()}};
}

Json to_json(const std::optional<Decomposition>& dec) {
  if (!dec) return nullptr;
  return {{"outer", dec->outer.to_string("w")}, {"inner", dec->inner.to_string()}};
}

Json to_json(const std::optional<SeparatedRatio>& sr) {
  if (!sr) return nullptr;
  return {{"a_num", sr->a_num.to_string("u")},
          {"a_den", sr->a_den.to_string("u")},
          {"b_num", sr->b_num.to_string("v")},
          {"b_den", sr->b_den.to_string("v")}};
}

Json to_json(const TrimResult& t) {
  return {{"A", to_json(t.a)},
          {"C", to_json(t.c)},
          {"removed_A", to_json(t.removed_a)},
          {"removed_C", to_json(t.removed_c)}};
}

Json to_json(const GridReport& g) {
  return {{"M", g.m},
          {"Q", g.q},
          {"image_size", g.image_size},
          {"sizes", {{"A", g.size_a}, {"B", g.size_b}, {"C", g.size_c}}},
          {"fibers_by_c", fiber_list(g.fibers_by_c)},
          {"fibers_by_b", fiber_list(g.fibers_by_b)}};
}

Json to_json(const CsCheck& c) {
  return {{"ok", c.ok}, {"slack_c", c.slack_c}, {"slack_b", c.slack_b}};
}

Json to_json(const SzCheck& s) { return {{"ok", s.ok}, {"zeros", s.zeros}, {"bound", s.bound}}; }

Json to_json(const GrowthFit& g) {
  Json rows = Json::array();
  for (const auto& [n, v] : g.measurements) rows.push_back({{"n", n}, {"value", v}});
  return {{"measure", to_string(g.measure)},
          {"schedule", g.schedule},
          {"measurements", rows},
          {"fitted_exponent", g.fitted_exponent}};
}

Json to_json(const SumProductReport& s) {
  Json j = {{"size_A", s.size_a}, {"sum", s.sum}, {"difference", s.difference}, {"product", s.product}};
  j["f_image"] = s.f_image ? Json(*s.f_image) : Json(nullptr);
  return j;
}

Json to_json(const ComponentReport& c, const CurveFamily& family) {
  Json comps = Json::array();
  for (const Component& comp : c.components) {
    Json members = Json::array();
    for (std::size_t i : comp.members)
      members.push_back({family.members[i].first.to_string(), family.members[i].second.to_string()});
    comps.push_back({{"component", comp.poly.to_string(kXY)},
                     {"multiplicity", comp.multiplicity},
                     {"popular", comp.popular},
                     {"members", members}});
  }
  return {{"kind", to_string(c.kind)},
          {"thresholds",
           {{"m0_part1", c.m0.m0_part1}, {"m0_tilde", c.m0.m0_tilde}, {"m0_part2", c.m0.m0_part2}}},
          {"threshold", c.threshold},
          {"components", comps}};
}

Json to_json(const IncidenceReport& i) {
  return {{"I", i.incidences}, {"per_point", i.per_point}, {"per_member", i.per_member}};
}

Json to_json(const LemmaCheck& l) {
  return {{"ok", l.ok},          {"d1", l.d1},          {"d2", l.d2},
          {"a1", to_json(l.a1)}, {"b1", to_json(l.b1)}, {"a2", to_json(l.a2)},
          {"b2", to_json(l.b2)}, {"lhs", to_json(l.lhs)}, {"rhs", to_json(l.rhs)}};
}

Json to_json(const CsIncidenceCheck& c) {
  return {{"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"I", c.incidences}};
}

Json to_json(const BridgeReport& b) {
  return {{"special_form", to_json(b.form)},
          {"predicted_none", b.predicted_none},
          {"consistent", b.consistent}};
}

// ---------------------------------------------------------------------------

namespace {

Rational rational_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("set spec: missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw InputError(std::string("set spec: \"") + key + "\" must be a rational string");
}

long integer_field(const Json& j, const char* key, long fallback, bool required) {
  if (!j.contains(key)) {
    if (required) throw InputError(std::string("set spec: missing \"") + key + "\"");
    return fallback;
  }
  if (!j.at(key).is_number_integer()) throw InputError(std::string("set spec: \"") + key + "\" must be an integer");
  return j.at(key).get<long>();
}

}  // namespace

SetSpec set_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InputError("set spec: expected an object with a \"kind\" string");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") {
    if (!j.contains("values") || !j.at("values").is_array()) throw InputError("set spec: missing \"values\" array");
    std::vector<Rational> values;
    for (const Json& v : j.at("values")) {
      if (v.is_string()) {
        values.push_back(Rational::parse(v.get<std::string>()));
      } else if (v.is_number_integer()) {
        values.emplace_back(v.get<long>());
      } else {
        throw InputError("set spec: values must be rational strings");
      }
    }
    return SetSpec::explicit_list(std::move(values));
  }
  const int n = static_cast<int>(integer_field(j, "n", 0, true));
  if (kind == "arithmetic") return SetSpec::arithmetic(rational_field(j, "start"), rational_field(j, "step"), n);
  if (kind == "geometric") return SetSpec::geometric(rational_field(j, "start"), rational_field(j, "ratio"), n);
  if (kind == "random")
    return SetSpec::random(static_cast<std::uint64_t>(integer_field(j, "seed", 0, true)), n,
                           integer_field(j, "num_range", 0, false), integer_field(j, "den_range", 1, false));
  throw InputError("set spec: unknown kind \"" + kind + "\"");
}

std::string growth_csv(const GrowthFit& g) {
  std::ostringstream out;
  out << "n,value\n";
  for (const auto& [n, v] : g.measurements) out << n << ',' << v << '\n';
  return out.str();
}

}  // namespace polyexp::report
