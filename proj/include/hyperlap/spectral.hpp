#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>

#include <Eigen/Dense>

#include "hyperlap/hypergraph.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// Eigenvalues ascending; column i of `eigenvectors` is the unit-norm
/// eigenvector paired with eigenvalues[i].
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
};

struct JacobiOptions {
  // Stop once the off-diagonal Frobenius norm is below tolerance * ||A||_F.
  double tolerance = 1e-12;
  int max_sweeps = 100;
  // Inputs with max |A - A^T| above this are rejected as NotSymmetric.
  double symmetry_tolerance = 1e-8;
};

/// Dense symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// The output is sorted ascending with a stable sort, so eigenvectors of a
/// numerically repeated eigenvalue keep the solver's order. Each eigenvector
/// is signed so that its largest-magnitude component is positive (lowest
/// index wins among equal magnitudes). Throws NotSymmetric or NoConvergence.
SpectralDecomposition eig_symmetric(const Eigen::MatrixXd& a, const JacobiOptions& options = {});

/// Applies the sign convention above to every column in place.
void canonicalize_signs(Eigen::MatrixXd& vectors);

/// Eigenvalues below this magnitude count as zero.
inline constexpr double kZeroEigenvalue = 1e-8;

/// Number of eigenvalues with |lambda| < kZeroEigenvalue, i.e. the number of
/// connected components when applied to a Laplacian spectrum.
std::size_t select_k_components(const SpectralDecomposition& d);

enum class GapCriterion { Ratio, Difference };

/// k in [1, n-2] maximising lambda_{k+2} - lambda_{k+1} or
/// lambda_{k+2} / lambda_{k+1} (1-based), smallest k on ties. Ratio
/// candidates with a zero denominator are skipped; DegenerateSpectrum if none
/// remain. Requires n >= 3.
std::size_t select_k_eigengap(const SpectralDecomposition& d, GapCriterion criterion);

enum class DimensionRule { Components, GapDifference, GapRatio };

std::size_t select_k(const SpectralDecomposition& d, DimensionRule rule);
DimensionRule parse_dimension_rule(std::string_view tag);

/// Spectrum of a Laplacian. The random-walk operator is not symmetric, so its
/// decomposition goes through L_sym = Dv^1/2 L_rw Dv^-1/2: the eigenvalues are
/// shared and the eigenvectors are Dv^-1/2 u, renormalised.
SpectralDecomposition laplacian_spectrum(const LaplacianMatrix& l,
                                         const JacobiOptions& options = {});
SpectralDecomposition laplacian_spectrum(const Hypergraph& g, LaplacianVariant variant,
                                         const JacobiOptions& options = {});

struct Embedding {
  RowMatrix coordinates;      // n x k, columns v_2 .. v_{k+1}
  LaplacianVariant variant;
  std::size_t k;
  Eigen::VectorXd eigenvalues;  // lambda_2 .. lambda_{k+1}
};

/// Takes columns 2..k+1 of a sorted decomposition; the first (trivial)
/// eigenvector is always skipped. KTooLarge unless 1 <= k <= n-2.
Embedding embedding_from(const SpectralDecomposition& d, LaplacianVariant variant,
                         std::size_t k);

Embedding eigenmap(const Hypergraph& g, LaplacianVariant variant, std::size_t k);
Embedding eigenmap(const Hypergraph& g, LaplacianVariant variant, DimensionRule rule);

/// One row per vertex, k comma-separated values, no header.
void write_embedding_csv(std::ostream& out, const Embedding& embedding);

}  // namespace hyperlap
