#include "hyperlap/hypergraph_json.hpp"

#include <fstream>

#include "hyperlap/error.hpp"

namespace hyperlap {

nlohmann::json to_json(const Hypergraph& g) {
  nlohmann::json doc;
  doc["n_vertices"] = g.n_vertices();
  doc["hyperedges"] = g.hyperedges();
  doc["weights"] = std::vector<double>(g.weights().begin(), g.weights().end());
  return doc;
}

Hypergraph hypergraph_from_json(const nlohmann::json& doc) {
  try {
    const auto n = doc.at("n_vertices").get<std::size_t>();
    auto edges = doc.at("hyperedges").get<std::vector<VertexSet>>();
    if (!doc.contains("weights")) return Hypergraph::build(n, std::move(edges));
    auto weights = doc.at("weights").get<std::vector<double>>();
    return Hypergraph::build(n, std::move(edges), std::move(weights));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("malformed hypergraph document: ") + e.what());
  }
}

void write_hypergraph(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Io, "cannot open '" + path + "' for writing");
  out << to_json(g).dump(2) << '\n';
}

Hypergraph read_hypergraph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::InvalidArgument, "'" + path + "' is not valid JSON: " + e.what());
  }
  return hypergraph_from_json(doc);
}

}  // namespace hyperlap
