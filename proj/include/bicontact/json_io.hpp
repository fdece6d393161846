#pragma once

// JSON persistence for curves, plugs and closed models. Rationals serialize
// as [num, den] integer pairs; persisted state carries no floats. Dumps are
// canonical (fixed key order, 2-space indent) so artifact files round-trip
// byte-identically.

#include "bicontact/assembly.hpp"
#include "bicontact/plug.hpp"
#include "bicontact/surface.hpp"

#include <json.hpp>

namespace bct {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const ReducedFraction& f);
Json to_json(const H1Class& c);
Json to_json(const PLCurve& c);
Json to_json(const TwistWord& w);
Json to_json(const Plug& p);
Json to_json(const ClosedModel& m);

Rational rational_from_json(const Json& j);
H1Class h1_from_json(const Json& j, const std::string& basis_tag);
PLCurve curve_from_json(const Json& j);
TwistWord word_from_json(const Json& j);
Plug plug_from_json(const Json& j);
ClosedModel model_from_json(const Json& j);

std::string canonical_dump(const Json& j);

}  // namespace bct
