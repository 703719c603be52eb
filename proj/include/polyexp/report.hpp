#pragma once

#include <optional>

#include "json.hpp"
#include "polyexp/apps.hpp"
#include "polyexp/curves.hpp"
#include "polyexp/grid.hpp"
#include "polyexp/structure.hpp"

// JSON forms of the library reports. Rationals and polynomials are emitted as
// canonical strings. Witness polynomials print h in w, phi in u and psi in v;
// curve polynomials print in x and y.
namespace polyexp::report {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const RationalSet& s);
Json to_json(const SetSpec& spec);
Json to_json(const SpecialForm& sf);
Json to_json(const std::optional<SkewForm>& sk);
Json to_json(const AssociatedH& ah);
Json to_json(const SteinReport& st);
Json to_json(const std::optional<Decomposition>& dec);
Json to_json(const std::optional<SeparatedRatio>& sr);
Json to_json(const TrimResult& t);
Json to_json(const GridReport& g);
Json to_json(const CsCheck& c);
Json to_json(const SzCheck& s);
Json to_json(const GrowthFit& g);
Json to_json(const SumProductReport& s);
Json to_json(const ComponentReport& c, const CurveFamily& family);
Json to_json(const IncidenceReport& i);
Json to_json(const LemmaCheck& l);
Json to_json(const CsIncidenceCheck& c);
Json to_json(const BridgeReport& b);

/// Reads {"kind": "arithmetic", "start": "0", "step": "1", "n": 16} and the
/// geometric ("ratio"), random ("seed", "num_range", "den_range") and explicit
/// ("values") variants. Throws InputError on malformed input.
SetSpec set_spec_from_json(const Json& j);

/// "n,value" header and one row per measurement.
std::string growth_csv(const GrowthFit& g);

}  // namespace polyexp::report
