#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace hyperlap {

using VertexSet = std::vector<std::size_t>;

/// Weighted hypergraph G = (V, E, w) with vertices 0..n-1.
///
/// Hyperedges are stored as sorted vertex sets (duplicates collapsed) and
/// weights are kept per hyperedge. Construction validates every invariant
/// the Laplacians depend on: |e| >= 2, vertices in range, finite positive
/// weights and no isolated vertex. Instances are immutable.
class Hypergraph {
 public:
  /// Throws hyperlap::Error with SingletonHyperedge, OutOfRangeVertex,
  /// NonPositiveWeight, IsolatedVertex or LengthMismatch.
  static Hypergraph build(std::size_t n_vertices, std::vector<VertexSet> hyperedges,
                          std::vector<double> weights);
  /// Unit weights.
  static Hypergraph build(std::size_t n_vertices, std::vector<VertexSet> hyperedges);

  std::size_t n_vertices() const noexcept { return n_vertices_; }
  std::size_t n_hyperedges() const noexcept { return hyperedges_.size(); }
  const std::vector<VertexSet>& hyperedges() const noexcept { return hyperedges_; }
  const VertexSet& hyperedge(std::size_t e) const { return hyperedges_.at(e); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t e) const { return weights_.at(e); }

  /// h(v, e): 1 if v belongs to hyperedge e, 0 otherwise.
  int incidence(std::size_t v, std::size_t e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  Hypergraph(std::size_t n, std::vector<VertexSet> edges, std::vector<double> weights)
      : n_vertices_(n), hyperedges_(std::move(edges)), weights_(std::move(weights)) {}

  std::size_t n_vertices_;
  std::vector<VertexSet> hyperedges_;
  std::vector<double> weights_;
};

struct DegreeVectors {
  Eigen::VectorXd vertex;     // d(v) = sum_e w(e) h(v,e)
  Eigen::VectorXd hyperedge;  // d(e) = sum_v h(v,e) = |e|
};

DegreeVectors degrees(const Hypergraph& g);

/// Dense n x |E| incidence matrix with 0/1 entries.
Eigen::MatrixXd incidence_dense(const Hypergraph& g);

/// Number of connected components, two vertices being connected when they
/// share a hyperedge (union-find).
std::size_t connected_components(const Hypergraph& g);

}  // namespace hyperlap
