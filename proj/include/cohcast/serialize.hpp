#pragma once

#include "cohcast/broadcast.hpp"
#include "cohcast/coherence.hpp"
#include "cohcast/oracle.hpp"
#include "cohcast/states.hpp"

#include <json.hpp>

#include <string>

namespace cohcast {

using Json = nlohmann::json;

Json to_json(const BlochTwoQubit& s);       // {"x":[..],"y":[..],"T":[[..]..]}
Json to_json(const BetaCoords& b);          // {"beta":[b1,b2,b3]}
Json density_to_json(const MatXc& rho);     // nested [re, im] pairs
MatXc density_from_json(const Json& j);

/// State file payload: {"x","y","T"} or {"beta":[..]} / {"beta1","beta2",
/// "beta3"} or a 4x4 complex matrix (bare nested array or under "density").
struct LoadedState {
  BlochTwoQubit bloch;
  Mat4c density;
  bool from_density = false;
};
LoadedState state_from_json(const Json& j);

Json to_json(const ValidityReport& r);
Json to_json(const CoherenceBreakdown& b);
Json to_json(const BroadcastVerdict& v);
Json to_json(const MachineParam& m);
Json to_json(const CloneOutputs& out);
Json to_json(const Beta2Interval& iv);
Json to_json(const Beta2Range& r);
Json to_json(const ComparisonReport& r);
Json to_json(const NoGainReport& r);
Json to_json(const RegionRecord& rec);      // NaN fields serialize as null
Json to_json(const RegionSummary& s);

/// CSV schema for region sweeps; NaN fields print as "nan".
std::string region_csv_header();
std::string region_csv_row(const RegionRecord& rec);

/// "[lo, hi)" style rendering with 3-decimal endpoints.
std::string format_interval(const Beta2Interval& iv);

}  // namespace cohcast
