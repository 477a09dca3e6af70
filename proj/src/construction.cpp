#include "hyperlap/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {

PointCloud::PointCloud(RowMatrix points) : points_(std::move(points)) {
  if (points_.rows() < 3) {
    throw Error(Errc::InvalidArgument, "point cloud needs at least 3 points");
  }
  if (!points_.allFinite()) throw Error(Errc::InvalidArgument, "point cloud has NaN/Inf entries");
}

Eigen::MatrixXd pairwise_distances(const RowMatrix& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto xi = row_span(points, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = std::sqrt(simd::squared_distance(xi, row_span(points, j)));
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return dist;
}

std::string_view to_string(EdgeWeighting w) noexcept {
  return w == EdgeWeighting::Unit ? "unit" : "gaussian";
}

EdgeWeighting parse_edge_weighting(std::string_view tag) {
  if (tag == "unit") return EdgeWeighting::Unit;
  if (tag == "gaussian") return EdgeWeighting::Gaussian;
  throw Error(Errc::InvalidArgument, "unknown edge weighting '" + std::string(tag) + "'");
}

namespace {

double median(std::vector<double> values) {
  const auto mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower =
      *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double mean_pairwise_distance(const VertexSet& edge, const Eigen::MatrixXd& dist) {
  double sum = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < edge.size(); ++a) {
    for (std::size_t b = a + 1; b < edge.size(); ++b) {
      sum += dist(static_cast<Eigen::Index>(edge[a]), static_cast<Eigen::Index>(edge[b]));
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

}  // namespace

Hypergraph knn_hyperedges(const PointCloud& pc, const HyperedgeOptions& options) {
  const std::size_t n = pc.size();
  if (options.k_h < 1 || options.k_h > n - 1) {
    throw Error(Errc::KTooLarge, "k_h = " + std::to_string(options.k_h) +
                                     " must lie in [1, " + std::to_string(n - 1) + "]");
  }
  if (options.sigma && !(*options.sigma > 0.0 && std::isfinite(*options.sigma))) {
    throw Error(Errc::InvalidArgument, "sigma must be positive and finite");
  }

  const Eigen::MatrixXd dist = pairwise_distances(pc);
  std::vector<VertexSet> edges;
  edges.reserve(n);
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) {
    order.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v) order.push_back(u);
    }
    const auto row = static_cast<Eigen::Index>(v);
    auto closer = [&](std::size_t a, std::size_t b) {
      const double da = dist(row, static_cast<Eigen::Index>(a));
      const double db = dist(row, static_cast<Eigen::Index>(b));
      return da < db || (da == db && a < b);
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(options.k_h),
                      order.end(), closer);
    VertexSet edge(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(options.k_h));
    edge.push_back(v);
    std::sort(edge.begin(), edge.end());
    edges.push_back(std::move(edge));
  }

  std::vector<double> weights(n, 1.0);
  if (options.weighting == EdgeWeighting::Gaussian) {
    std::vector<double> spread(n);
    for (std::size_t e = 0; e < n; ++e) spread[e] = mean_pairwise_distance(edges[e], dist);
    double sigma = options.sigma ? *options.sigma : median(spread);
    if (!(sigma > 0.0)) sigma = 1.0;  // all hyperedges collapsed onto duplicate points
    for (std::size_t e = 0; e < n; ++e) {
      const double r = spread[e] / sigma;
      weights[e] = std::max(std::exp(-r * r), kMinEdgeWeight);
    }
  }
  return Hypergraph::build(n, std::move(edges), std::move(weights));
}

}  // namespace hyperlap
