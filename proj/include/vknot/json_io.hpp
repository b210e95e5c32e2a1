#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "vknot/cobordism.hpp"
#include "vknot/diagram.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/polynomial.hpp"

namespace vknot {

// Key order is fixed so identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

Json arc_to_json(ArcRef a);
ArcRef arc_from_json(const Json& j);

Json site_to_json(const MoveSite& site);
MoveSite site_from_json(const Json& j);

Json event_to_json(const CobordismEvent& e);
CobordismEvent event_from_json(const Json& j);
std::vector<CobordismEvent> events_from_json(const Json& j);

Json exponent_to_json(const AffineExponent& e);
Json polynomial_terms_to_json(const IndexPolynomial& p);
Json weights_to_json(const std::vector<CrossingWeight>& weights);
Json spectrum_to_json(const WritheSpectrum& s);

Json report_to_json(const Diagram& d, const InvariantReport& report);
Json trace_report_to_json(const TraceReport& report);

}  // namespace vknot
