#pragma once

// Independent reference computations used to check the library. None of
// these call into the code paths they verify.

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyperlap/hypergraph.hpp"

namespace hyperlap::testkit {

// Gaussian elimination with partial pivoting, solving A X = B column by column.
inline Eigen::MatrixXd gauss_solve(Eigen::MatrixXd a, Eigen::MatrixXd b) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) throw std::runtime_error("singular");
    a.row(col).swap(a.row(pivot));
    b.row(col).swap(b.row(pivot));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      a.row(r) -= f * a.row(col);
      b.row(r) -= f * b.row(col);
    }
  }
  Eigen::MatrixXd x(n, b.cols());
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    for (Eigen::Index c = 0; c < b.cols(); ++c) {
      double s = b(r, c);
      for (Eigen::Index k = r + 1; k < n; ++k) s -= a(r, k) * x(k, c);
      x(r, c) = s / a(r, r);
    }
  }
  return x;
}

// Straight transcription of L = Dv - H W De^-1 H^T with explicit matrices.
inline Eigen::MatrixXd dense_combinatorial(const Hypergraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_vertices());
  const auto m = static_cast<Eigen::Index>(g.n_hyperedges());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, m);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd de_inv = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index e = 0; e < m; ++e) {
    for (Eigen::Index v = 0; v < n; ++v) {
      h(v, e) = g.incidence(static_cast<std::size_t>(v), static_cast<std::size_t>(e));
    }
    w(e, e) = g.weight(static_cast<std::size_t>(e));
    de_inv(e, e) = 1.0 / h.col(e).sum();
  }
  const Eigen::VectorXd dv = h * w.diagonal();
  Eigen::MatrixXd dvm = dv.asDiagonal();
  return dvm - h * w * de_inv * h.transpose();
}

// Sorted eigenvalues via Eigen's own solver, for comparing spectra.
inline Eigen::VectorXd reference_eigenvalues(const Eigen::MatrixXd& a) {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

// Eigenvalues of a general real matrix with real spectrum, sorted.
inline Eigen::VectorXd reference_real_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  Eigen::VectorXd ev = es.eigenvalues().real();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev;
}

}  // namespace hyperlap::testkit
