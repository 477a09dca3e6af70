#include "hyperlap/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hyperlap/error.hpp"

namespace hyperlap {

Hypergraph Hypergraph::build(std::size_t n_vertices, std::vector<VertexSet> hyperedges,
                             std::vector<double> weights) {
  if (n_vertices == 0) throw Error(Errc::InvalidArgument, "hypergraph needs at least one vertex");
  if (hyperedges.size() != weights.size()) {
    throw Error(Errc::LengthMismatch, std::to_string(hyperedges.size()) + " hyperedges but " +
                                          std::to_string(weights.size()) + " weights");
  }

  std::vector<bool> covered(n_vertices, false);
  for (std::size_t e = 0; e < hyperedges.size(); ++e) {
    auto& edge = hyperedges[e];
    std::sort(edge.begin(), edge.end());
    edge.erase(std::unique(edge.begin(), edge.end()), edge.end());
    if (edge.size() < 2) {
      throw Error(Errc::SingletonHyperedge,
                  "hyperedge " + std::to_string(e) + " has fewer than two distinct vertices");
    }
    if (edge.back() >= n_vertices) {
      throw Error(Errc::OutOfRangeVertex, "hyperedge " + std::to_string(e) + " references vertex " +
                                              std::to_string(edge.back()) + " >= " +
                                              std::to_string(n_vertices));
    }
    if (!std::isfinite(weights[e]) || !(weights[e] > 0.0)) {
      throw Error(Errc::NonPositiveWeight,
                  "hyperedge " + std::to_string(e) + " has weight " + std::to_string(weights[e]));
    }
    for (auto v : edge) covered[v] = true;
  }

  const auto missing = std::find(covered.begin(), covered.end(), false);
  if (missing != covered.end()) {
    throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(missing - covered.begin()) +
                                          " belongs to no hyperedge");
  }
  return Hypergraph(n_vertices, std::move(hyperedges), std::move(weights));
}

Hypergraph Hypergraph::build(std::size_t n_vertices, std::vector<VertexSet> hyperedges) {
  std::vector<double> weights(hyperedges.size(), 1.0);
  return build(n_vertices, std::move(hyperedges), std::move(weights));
}

int Hypergraph::incidence(std::size_t v, std::size_t e) const {
  const auto& edge = hyperedges_.at(e);
  return std::binary_search(edge.begin(), edge.end(), v) ? 1 : 0;
}

DegreeVectors degrees(const Hypergraph& g) {
  DegreeVectors d{Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.n_vertices())),
                  Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.n_hyperedges()))};
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const auto& edge = g.hyperedge(e);
    d.hyperedge[static_cast<Eigen::Index>(e)] = static_cast<double>(edge.size());
    for (auto v : edge) d.vertex[static_cast<Eigen::Index>(v)] += g.weight(e);
  }
  return d;
}

Eigen::MatrixXd incidence_dense(const Hypergraph& g) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.n_vertices()),
                                            static_cast<Eigen::Index>(g.n_hyperedges()));
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    for (auto v : g.hyperedge(e)) {
      h(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(e)) = 1.0;
    }
  }
  return h;
}

std::size_t connected_components(const Hypergraph& g) {
  std::vector<std::size_t> parent(g.n_vertices());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = g.n_vertices();
  for (const auto& edge : g.hyperedges()) {
    const auto root = find(edge.front());
    for (std::size_t i = 1; i < edge.size(); ++i) {
      const auto other = find(edge[i]);
      if (other != root) {
        parent[other] = root;
        --components;
      }
    }
  }
  return components;
}

}  // namespace hyperlap
