#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// n x D sample matrix (rows are points). Rejects NaN/Inf and n < 3.
class PointCloud {
 public:
  explicit PointCloud(RowMatrix points);

  const RowMatrix& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(points_.rows()); }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(points_.cols()); }

 private:
  RowMatrix points_;
};

/// Euclidean distances, computed directly from coordinate differences.
Eigen::MatrixXd pairwise_distances(const RowMatrix& points);
inline Eigen::MatrixXd pairwise_distances(const PointCloud& pc) {
  return pairwise_distances(pc.points());
}

enum class EdgeWeighting { Unit, Gaussian };

std::string_view to_string(EdgeWeighting w) noexcept;
EdgeWeighting parse_edge_weighting(std::string_view tag);

struct HyperedgeOptions {
  std::size_t k_h = 5;
  EdgeWeighting weighting = EdgeWeighting::Unit;
  std::optional<double> sigma;  // nullopt: median of the per-hyperedge mean distances
};

/// Gaussian weights below this are clamped up to it.
inline constexpr double kMinEdgeWeight = 1e-12;

/// One hyperedge per vertex v: {v} plus its k_h nearest neighbours (ties go
/// to the lower index). Identical sets produced by different anchors are kept,
/// so |E| = n. Gaussian weighting uses w = exp(-m^2 / sigma^2) with m the mean
/// pairwise distance inside the hyperedge.
Hypergraph knn_hyperedges(const PointCloud& pc, const HyperedgeOptions& options = {});

}  // namespace hyperlap
