#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "bisetcover/connectivity.hpp"
#include "bisetcover/crossing_cover.hpp"
#include "bisetcover/exact.hpp"
#include "bisetcover/family.hpp"
#include "bisetcover/primal_dual.hpp"

namespace bisetcover {

using Json = nlohmann::ordered_json;

Json to_json(const NodeSet& s);
Json to_json(const Biset& b);
Json to_json(const Digraph& g);
Json to_json(const ExplicitFamily& f);
Json to_json(const DualSolution& y);
Json to_json(const PdResult& r);
Json to_json(const CoverResult& r);
Json to_json(const ExactReport& r);
Json to_json(const LadderResult& r);
Json to_json(const Audit& a);

// Parsers throw UsageError on malformed input.
NodeSet node_set_from_json(const Json& j, int n);
Biset biset_from_json(const Json& j, int n);
Digraph graph_from_json(const Json& j);
ExplicitFamily family_from_json(const Json& j);
// Accepts any result object carrying "edges": [int...].
EdgeSet edges_from_json(const Json& j, const Digraph& g);

Json read_json_file(const std::string& path);

}  // namespace bisetcover
