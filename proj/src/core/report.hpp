#pragma once

#include <nlohmann/json.hpp>

#include "core/invariants.hpp"
#include "core/metric.hpp"
#include "core/structure.hpp"

namespace gromov {

// Exact values are serialized as strings; counts stay JSON numbers.
nlohmann::json fingerprint_json(const InvariantFingerprint& fp);

nlohmann::json structure_json(const GromovStructure& s);

nlohmann::json decomposition_json(const ChainCycleDecomposition& d);

// Everything the analyze command reports for one metric: extraction detail
// (including the non-generic case), the structure matrix, removed edges,
// pendant-free adjacency, chain/cycle decomposition, and the fingerprint.
nlohmann::json analyze_report(const MetricSpace& m);

}  // namespace gromov
