#pragma once

#include <span>
#include <string>

#include <Eigen/Dense>

namespace hyperlap {

// Sample-major storage: each row (one point) is contiguous, which is what
// the distance kernels want.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const RowMatrix& m, Eigen::Index r) {
  return {m.data() + r * m.cols(), static_cast<std::size_t>(m.cols())};
}

/// Shortest decimal string that round-trips to the same double.
std::string format_shortest(double x);

}  // namespace hyperlap
