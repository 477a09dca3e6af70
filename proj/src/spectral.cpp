#include "hyperlap/spectral.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "hyperlap/error.hpp"

namespace hyperlap {

std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::size_t select_k_components(const SpectralDecomposition& d) {
  std::size_t count = 0;
  for (Eigen::Index i = 0; i < d.eigenvalues.size(); ++i) {
    if (std::abs(d.eigenvalues[i]) < kZeroEigenvalue) ++count;
  }
  return count;
}

std::size_t select_k_eigengap(const SpectralDecomposition& d, GapCriterion criterion) {
  const auto n = static_cast<std::size_t>(d.eigenvalues.size());
  if (n < 3) throw Error(Errc::InvalidArgument, "eigengap selection needs at least 3 eigenvalues");
  // 1-based lambda_{k+1} is eigenvalues[k], lambda_{k+2} is eigenvalues[k+1].
  std::size_t best_k = 0;
  double best = 0.0;
  for (std::size_t k = 1; k + 2 <= n; ++k) {
    const double lo = d.eigenvalues[static_cast<Eigen::Index>(k)];
    const double hi = d.eigenvalues[static_cast<Eigen::Index>(k + 1)];
    double score;
    if (criterion == GapCriterion::Difference) {
      score = hi - lo;
    } else {
      if (std::abs(lo) < kZeroEigenvalue) continue;
      score = hi / lo;
    }
    if (best_k == 0 || score > best) {
      best_k = k;
      best = score;
    }
  }
  if (best_k == 0) {
    throw Error(Errc::DegenerateSpectrum, "every ratio candidate has a zero denominator");
  }
  return best_k;
}

std::size_t select_k(const SpectralDecomposition& d, DimensionRule rule) {
  switch (rule) {
    case DimensionRule::Components: {
      const auto k = select_k_components(d);
      if (k == 0) throw Error(Errc::DegenerateSpectrum, "no zero eigenvalue found");
      return k;
    }
    case DimensionRule::GapDifference: return select_k_eigengap(d, GapCriterion::Difference);
    case DimensionRule::GapRatio: return select_k_eigengap(d, GapCriterion::Ratio);
  }
  throw Error(Errc::InvalidArgument, "unknown dimension rule");
}

DimensionRule parse_dimension_rule(std::string_view tag) {
  if (tag == "components") return DimensionRule::Components;
  if (tag == "gap-diff") return DimensionRule::GapDifference;
  if (tag == "gap-ratio") return DimensionRule::GapRatio;
  throw Error(Errc::InvalidArgument, "unknown dimension rule '" + std::string(tag) + "'");
}

SpectralDecomposition laplacian_spectrum(const LaplacianMatrix& l, const JacobiOptions& options) {
  if (l.variant != LaplacianVariant::RandomWalk) return eig_symmetric(l.matrix, options);

  const Eigen::VectorXd sqrt_d = l.vertex_degrees.cwiseSqrt();
  Eigen::MatrixXd sym = sqrt_d.asDiagonal() * l.matrix * sqrt_d.cwiseInverse().asDiagonal();
  sym = (0.5 * (sym + sym.transpose())).eval();
  auto d = eig_symmetric(sym, options);
  d.eigenvectors = sqrt_d.cwiseInverse().asDiagonal() * d.eigenvectors;
  d.eigenvectors.colwise().normalize();
  canonicalize_signs(d.eigenvectors);
  return d;
}

SpectralDecomposition laplacian_spectrum(const Hypergraph& g, LaplacianVariant variant,
                                         const JacobiOptions& options) {
  if (variant != LaplacianVariant::RandomWalk) {
    return eig_symmetric(laplacian(g, variant).matrix, options);
  }
  const auto sym = symmetric_laplacian(g);
  auto d = eig_symmetric(sym.matrix, options);
  const Eigen::VectorXd inv_sqrt = sym.vertex_degrees.cwiseSqrt().cwiseInverse();
  d.eigenvectors = inv_sqrt.asDiagonal() * d.eigenvectors;
  d.eigenvectors.colwise().normalize();
  canonicalize_signs(d.eigenvectors);
  return d;
}

Embedding embedding_from(const SpectralDecomposition& d, LaplacianVariant variant,
                         std::size_t k) {
  const auto n = static_cast<std::size_t>(d.eigenvalues.size());
  if (k == 0) throw Error(Errc::InvalidArgument, "embedding dimension must be at least 1");
  if (n < 3 || k > n - 2) {
    throw Error(Errc::KTooLarge, "k = " + std::to_string(k) + " exceeds n - 2 for n = " +
                                     std::to_string(n));
  }
  const auto kk = static_cast<Eigen::Index>(k);
  return {d.eigenvectors.middleCols(1, kk), variant, k, d.eigenvalues.segment(1, kk)};
}

Embedding eigenmap(const Hypergraph& g, LaplacianVariant variant, std::size_t k) {
  const auto n = g.n_vertices();
  if (k == 0) throw Error(Errc::InvalidArgument, "embedding dimension must be at least 1");
  if (n < 3 || k > n - 2) {
    throw Error(Errc::KTooLarge, "k = " + std::to_string(k) + " exceeds n - 2 for n = " +
                                     std::to_string(n));
  }
  return embedding_from(laplacian_spectrum(g, variant), variant, k);
}

Embedding eigenmap(const Hypergraph& g, LaplacianVariant variant, DimensionRule rule) {
  const auto d = laplacian_spectrum(g, variant);
  return embedding_from(d, variant, select_k(d, rule));
}

void write_embedding_csv(std::ostream& out, const Embedding& embedding) {
  const auto& x = embedding.coordinates;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      if (j) out << ',';
      out << format_shortest(x(i, j));
    }
    out << '\n';
  }
}

}  // namespace hyperlap
