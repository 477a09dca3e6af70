#include "hyperlap/laplacian.hpp"

#include <string>

#include "hyperlap/error.hpp"

namespace hyperlap {

std::string_view short_name(LaplacianVariant v) noexcept {
  switch (v) {
    case LaplacianVariant::Combinatorial: return "comb";
    case LaplacianVariant::Symmetric: return "sym";
    case LaplacianVariant::RandomWalk: return "rw";
  }
  return "?";
}

std::string_view display_name(LaplacianVariant v) noexcept {
  switch (v) {
    case LaplacianVariant::Combinatorial: return "Combinatorial";
    case LaplacianVariant::Symmetric: return "Symmetric normalized";
    case LaplacianVariant::RandomWalk: return "Random walk";
  }
  return "?";
}

LaplacianVariant parse_variant(std::string_view tag) {
  if (tag == "comb" || tag == "combinatorial") return LaplacianVariant::Combinatorial;
  if (tag == "sym" || tag == "symmetric") return LaplacianVariant::Symmetric;
  if (tag == "rw" || tag == "random_walk") return LaplacianVariant::RandomWalk;
  throw Error(Errc::InvalidArgument, "unknown Laplacian variant '" + std::string(tag) + "'");
}

Eigen::MatrixXd hyperedge_adjacency(const Hypergraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_vertices());
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t e = 0; e < g.n_hyperedges(); ++e) {
    const auto& edge = g.hyperedge(e);
    const double scale = g.weight(e) / static_cast<double>(edge.size());
    for (auto u : edge) {
      for (auto v : edge) {
        theta(static_cast<Eigen::Index>(u), static_cast<Eigen::Index>(v)) += scale;
      }
    }
  }
  return theta;
}

Eigen::MatrixXd transition_matrix(const Hypergraph& g) {
  const auto dv = degrees(g).vertex;
  return dv.cwiseInverse().asDiagonal() * hyperedge_adjacency(g);
}

LaplacianMatrix combinatorial_laplacian(const Hypergraph& g) {
  auto dv = degrees(g).vertex;
  Eigen::MatrixXd l = -hyperedge_adjacency(g);
  l.diagonal() += dv;
  return {LaplacianVariant::Combinatorial, std::move(l), std::move(dv)};
}

LaplacianMatrix symmetric_laplacian(const Hypergraph& g) {
  auto dv = degrees(g).vertex;
  const Eigen::VectorXd inv_sqrt = dv.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd l = -(inv_sqrt.asDiagonal() * hyperedge_adjacency(g) * inv_sqrt.asDiagonal());
  // exact symmetry; the two-sided scaling can differ in the last bit
  l = (0.5 * (l + l.transpose())).eval();
  l.diagonal().array() += 1.0;
  return {LaplacianVariant::Symmetric, std::move(l), std::move(dv)};
}

LaplacianMatrix random_walk_laplacian(const Hypergraph& g) {
  auto dv = degrees(g).vertex;
  Eigen::MatrixXd l = -(dv.cwiseInverse().asDiagonal() * hyperedge_adjacency(g));
  l.diagonal().array() += 1.0;
  return {LaplacianVariant::RandomWalk, std::move(l), std::move(dv)};
}

LaplacianMatrix laplacian(const Hypergraph& g, LaplacianVariant variant) {
  switch (variant) {
    case LaplacianVariant::Combinatorial: return combinatorial_laplacian(g);
    case LaplacianVariant::Symmetric: return symmetric_laplacian(g);
    case LaplacianVariant::RandomWalk: return random_walk_laplacian(g);
  }
  throw Error(Errc::InvalidArgument, "unknown Laplacian variant");
}

}  // namespace hyperlap
