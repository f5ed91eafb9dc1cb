#pragma once

// JSON forms of trees, strata, atlases and reports. Rationals are strings
// "p/q"; objects use sorted keys so output is deterministic.

#include "redgw/audit.hpp"
#include "redgw/chart.hpp"
#include "redgw/comparison.hpp"
#include "redgw/tree.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace redgw {

using Json = nlohmann::json;

/// {"root": id, "vertices": [{"id", "parent" (null at the root), "weight", "legs"}]}
Json to_json(const WeightedTree &t);
/// Throws InputError on malformed input or an invalid tree.
WeightedTree tree_from_json(const Json &j);

/// [[d_1, [legs]], ...]
Json to_json(const Stratum &mu);
Stratum stratum_from_json(const Json &j);

Json to_json(const ChartAtlas &atlas);
Json to_json(const AuditReport &report);
Json to_json(const ComparisonReport &report);
ComparisonReport report_from_json(const Json &j);

Json sequences_to_json(const WeightedTree &t, const std::vector<AdvancingSequence> &sequences);

/// Two-space indent with a trailing newline.
std::string dump(const Json &j);

} // namespace redgw
