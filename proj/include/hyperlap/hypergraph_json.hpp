#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

// {"n_vertices": int, "hyperedges": [[int, ...], ...], "weights": [float, ...]}
// "weights" may be omitted on input, in which case every weight is 1.0.
nlohmann::json to_json(const Hypergraph& g);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);

void write_hypergraph(const std::string& path, const Hypergraph& g);
Hypergraph read_hypergraph(const std::string& path);

}  // namespace hyperlap
