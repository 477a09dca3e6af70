#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"
#include "hyperlap/spectral.hpp"

namespace hyperlap {
namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < q; ++p) sum += a(p, q) * a(p, q);
  }
  return std::sqrt(2.0 * sum);
}

// One two-sided rotation A <- J^T A J zeroing A(p, q), with V <- V J.
// Columns are contiguous (column-major), so the column update runs through
// the SIMD rotate kernel and the row update is copied back by symmetry.
void rotate_pair(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q,
                 const simd::KernelTable& k) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const auto n = static_cast<std::size_t>(a.rows());

  k.rotate(a.col(p).data(), a.col(q).data(), n, c, s);
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    a(p, r) = a(r, p);
    a(q, r) = a(r, q);
  }
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  k.rotate(v.col(p).data(), v.col(q).data(), n, c, s);
}

}  // namespace

void canonicalize_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double mag = std::abs(vectors(i, j));
      if (mag > best_abs) {
        best_abs = mag;
        best = i;
      }
    }
    if (vectors.rows() > 0 && vectors(best, j) < 0.0) vectors.col(j) *= -1.0;
  }
}

SpectralDecomposition eig_symmetric(const Eigen::MatrixXd& input, const JacobiOptions& options) {
  if (input.rows() != input.cols() || input.rows() == 0) {
    throw Error(Errc::InvalidArgument, "eig_symmetric needs a non-empty square matrix");
  }
  if (!input.allFinite()) throw Error(Errc::InvalidArgument, "matrix has non-finite entries");
  const double asym = (input - input.transpose()).cwiseAbs().maxCoeff();
  if (asym > options.symmetry_tolerance) {
    throw Error(Errc::NotSymmetric, "max |A - A^T| = " + std::to_string(asym));
  }

  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = 0.5 * (input + input.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const auto& kernels = simd::active();

  const double threshold = options.tolerance * a.norm();
  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (Eigen::Index q = 1; q < n; ++q) {
      for (Eigen::Index p = 0; p < q; ++p) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Once an element is negligible next to both diagonal entries a
        // rotation would not change them; drop it instead.
        const double scaled = 100.0 * std::abs(apq);
        if (sweep > 3 && std::abs(a(p, p)) + scaled == std::abs(a(p, p)) &&
            std::abs(a(q, q)) + scaled == std::abs(a(q, q))) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate_pair(a, v, p, q, kernels);
      }
    }
  }
  if (!converged) {
    throw Error(Errc::NoConvergence,
                "Jacobi did not converge within " + std::to_string(options.max_sweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SpectralDecomposition out{Eigen::VectorXd(n), Eigen::MatrixXd(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto src = order[static_cast<std::size_t>(i)];
    out.eigenvalues[i] = a(src, src);
    out.eigenvectors.col(i) = v.col(src);
  }
  canonicalize_signs(out.eigenvectors);
  return out;
}

}  // namespace hyperlap
