#pragma once

#include <json.hpp>
#include <string>

#include "pgconn/harness.hpp"

namespace pgconn {

nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const PropertySummary& s);

/// DOT text for P(G) with vertices labelled "i:o(g)"; vertices in `removed`
/// are left out.
std::string export_dot(const Group& g, const PowerGraph& graph, const VertexSet& removed);

}  // namespace pgconn
