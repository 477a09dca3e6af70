#pragma once

#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap {

enum class LaplacianVariant { Combinatorial, Symmetric, RandomWalk };

/// CLI tags: "comb", "sym", "rw".
std::string_view short_name(LaplacianVariant v) noexcept;
/// Table labels: "Combinatorial", "Symmetric normalized", "Random walk".
std::string_view display_name(LaplacianVariant v) noexcept;
LaplacianVariant parse_variant(std::string_view tag);

struct LaplacianMatrix {
  LaplacianVariant variant;
  Eigen::MatrixXd matrix;
  Eigen::VectorXd vertex_degrees;
};

/// Theta = H W De^-1 H^T, accumulated hyperedge by hyperedge. Entry (u, v)
/// is sum over e containing both of w(e) / |e|.
Eigen::MatrixXd hyperedge_adjacency(const Hypergraph& g);

/// P = Dv^-1 H W De^-1 H^T, row-stochastic.
Eigen::MatrixXd transition_matrix(const Hypergraph& g);

/// L = Dv - H W De^-1 H^T
LaplacianMatrix combinatorial_laplacian(const Hypergraph& g);
/// L_sym = I - Dv^-1/2 H W De^-1 H^T Dv^-1/2
LaplacianMatrix symmetric_laplacian(const Hypergraph& g);
/// L_rw = I - Dv^-1 H W De^-1 H^T (not symmetric)
LaplacianMatrix random_walk_laplacian(const Hypergraph& g);

LaplacianMatrix laplacian(const Hypergraph& g, LaplacianVariant variant);

}  // namespace hyperlap
