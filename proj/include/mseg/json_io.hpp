#pragma once

#include "json.hpp"
#include "mseg/invariants.hpp"
#include "mseg/mw.hpp"
#include "mseg/order.hpp"

namespace mseg {

// {"b2": <int>, "e2": <int>} with doubled endpoints.
nlohmann::json to_json(const Segment& seg);

// {"segments": [...]} in canonical order.
nlohmann::json to_json(const Multisegment& alpha);
Multisegment multisegment_from_json(const nlohmann::json& j);

// List of iterations, each {"emitted": .., "chain": [{"segment": ..,
// "removed_x2": ..}, ...]}.
nlohmann::json to_json(const DualTrace& trace);

nlohmann::json to_json(const RankTriangle& triangle);

// {"e_x2": .., "L": .., "n": .., "c": .., "S": .., "C": ..}
nlohmann::json to_json(const InvariantProfile& profile);

// {"simple": b, "ladder": b, "symmetric": b, "arthur": b, "center_x2": int|null}
nlohmann::json classification_json(const Multisegment& alpha);

nlohmann::json to_json(const RigidityReport& report);

}  // namespace mseg
