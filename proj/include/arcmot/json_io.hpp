#pragma once

#include <nlohmann/json.hpp>

#include "arcmot/arcspace.hpp"
#include "arcmot/motive.hpp"
#include "arcmot/reduction.hpp"
#include "arcmot/zeta.hpp"

namespace arcmot {

// Deterministic JSON (insertion-ordered keys, canonical strings everywhere).
using Json = nlohmann::ordered_json;

Json ring_to_json(const PolyRing& ring);
Json ideal_to_json(const Ideal& ideal);
Json arc_to_json(const ArcPresentation& arc);
Json reduction_to_json(const ReducedPresentation& red);
Json decomposition_to_json(const Decomposition& dec);
Json class_to_json(const MotiveClass& c);
Json series_to_json(const MotiveSeries& s);
Json rational_to_json(const MotiveRational& r);
Json zeta_result_to_json(const ZetaResult& z);
Json report_to_json(const SeriesReport& rep);

// Parsers for the formats above (used by the CLI --script mode and fixtures).
RingPtr ring_from_json(const Json& j);
Ideal ideal_from_json(const Json& j);
MotiveClass class_from_json(const Json& j);
MotiveRational rational_from_json(const Json& j);

}  // namespace arcmot
