#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

/// Training rows with integer class ids in [0, n_classes). Class id order is
/// the "label order" used by every tie-break below.
struct LabeledPoints {
  RowMatrix features;
  std::vector<int> labels;
  int n_classes = 0;
};

/// Throws EmptyTrainingSet, LengthMismatch or InvalidArgument.
void validate(const LabeledPoints& points);

/// Majority vote among the k_c nearest training rows.
///
/// Neighbours are ranked by (distance, label, row index); the label key makes
/// the selected set independent of row order. Vote ties go to the label with
/// the closest representative, then to the lower label.
int knn_predict(const LabeledPoints& train, std::span<const double> query, std::size_t k_c);

/// Multiclass kernel ridge regression on one-hot targets with an RBF kernel
/// K_ij = exp(-|x_i - x_j|^2 / (2 sigma^2)).
class KrrModel {
 public:
  /// bandwidth nullopt: median of the nonzero pairwise training distances
  /// (1.0 when there are none). Throws SingularSystem if the solve fails.
  static KrrModel fit(const LabeledPoints& train, std::optional<double> bandwidth, double ridge);

  Eigen::VectorXd scores(std::span<const double> query) const;
  /// argmax of scores(); scores within 1e-12 (relative) of the best count as
  /// tied and resolve to the lower label.
  int predict(std::span<const double> query) const;

  const RowMatrix& train_features() const noexcept { return train_features_; }
  const Eigen::MatrixXd& dual_coefficients() const noexcept { return alpha_; }
  double bandwidth() const noexcept { return bandwidth_; }
  double ridge() const noexcept { return ridge_; }
  int n_classes() const noexcept { return n_classes_; }

 private:
  KrrModel() = default;

  RowMatrix train_features_;
  Eigen::MatrixXd alpha_;
  double bandwidth_ = 1.0;
  double ridge_ = 1e-3;
  int n_classes_ = 0;
};

inline KrrModel krr_fit(const LabeledPoints& train, std::optional<double> bandwidth,
                        double ridge) {
  return KrrModel::fit(train, bandwidth, ridge);
}
inline int krr_predict(const KrrModel& model, std::span<const double> query) {
  return model.predict(query);
}

/// Gram matrix of the RBF kernel over the rows of x.
Eigen::MatrixXd rbf_gram(const RowMatrix& x, double bandwidth);
/// Median of the nonzero pairwise distances between rows, nullopt if none.
std::optional<double> median_pairwise_distance(const RowMatrix& x);

/// Fraction of positions where prediction equals truth.
double accuracy(std::span<const int> predictions, std::span<const int> truth);

enum class ClassifierKind { Knn, Krr };
std::string_view short_name(ClassifierKind c) noexcept;
ClassifierKind parse_classifier(std::string_view tag);

}  // namespace hyperlap
