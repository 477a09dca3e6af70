#include "hyperlap/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {

void validate(const LabeledPoints& points) {
  if (points.features.rows() == 0) throw Error(Errc::EmptyTrainingSet, "no training rows");
  if (static_cast<std::size_t>(points.features.rows()) != points.labels.size()) {
    throw Error(Errc::LengthMismatch, "feature rows and labels differ in count");
  }
  if (points.n_classes < 1) throw Error(Errc::InvalidArgument, "label set is empty");
  for (int label : points.labels) {
    if (label < 0 || label >= points.n_classes) {
      throw Error(Errc::InvalidArgument, "label " + std::to_string(label) + " outside label set");
    }
  }
}

namespace {

void check_query(const RowMatrix& features, std::span<const double> query) {
  if (static_cast<Eigen::Index>(query.size()) != features.cols()) {
    throw Error(Errc::LengthMismatch, "query has dimension " + std::to_string(query.size()) +
                                          ", training features have " +
                                          std::to_string(features.cols()));
  }
}

}  // namespace

int knn_predict(const LabeledPoints& train, std::span<const double> query, std::size_t k_c) {
  validate(train);
  check_query(train.features, query);
  const auto m = static_cast<std::size_t>(train.features.rows());
  if (k_c < 1 || k_c > m) {
    throw Error(Errc::InvalidArgument,
                "k_c = " + std::to_string(k_c) + " must lie in [1, " + std::to_string(m) + "]");
  }

  std::vector<double> dist(m);
  for (std::size_t i = 0; i < m; ++i) {
    dist[i] = simd::squared_distance(query, row_span(train.features, static_cast<Eigen::Index>(i)));
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k_c), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (dist[a] != dist[b]) return dist[a] < dist[b];
                      if (train.labels[a] != train.labels[b]) {
                        return train.labels[a] < train.labels[b];
                      }
                      return a < b;
                    });

  const auto c = static_cast<std::size_t>(train.n_classes);
  std::vector<std::size_t> votes(c, 0);
  std::vector<double> nearest(c, std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < k_c; ++r) {
    const auto label = static_cast<std::size_t>(train.labels[order[r]]);
    ++votes[label];
    nearest[label] = std::min(nearest[label], dist[order[r]]);
  }
  std::size_t best = 0;
  for (std::size_t label = 1; label < c; ++label) {
    if (votes[label] > votes[best] ||
        (votes[label] == votes[best] && nearest[label] < nearest[best])) {
      best = label;
    }
  }
  return static_cast<int>(best);
}

Eigen::MatrixXd rbf_gram(const RowMatrix& x, double bandwidth) {
  const Eigen::Index m = x.rows();
  const double scale = 1.0 / (2.0 * bandwidth * bandwidth);
  Eigen::MatrixXd k(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    k(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double v = std::exp(-simd::squared_distance(row_span(x, i), row_span(x, j)) * scale);
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return k;
}

std::optional<double> median_pairwise_distance(const RowMatrix& x) {
  std::vector<double> d;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < x.rows(); ++j) {
      const double v = std::sqrt(simd::squared_distance(row_span(x, i), row_span(x, j)));
      if (v > 0.0) d.push_back(v);
    }
  }
  if (d.empty()) return std::nullopt;
  std::sort(d.begin(), d.end());
  const auto mid = d.size() / 2;
  return d.size() % 2 == 1 ? d[mid] : 0.5 * (d[mid - 1] + d[mid]);
}

KrrModel KrrModel::fit(const LabeledPoints& train, std::optional<double> bandwidth, double ridge) {
  validate(train);
  if (!(ridge > 0.0) || !std::isfinite(ridge)) {
    throw Error(Errc::InvalidArgument, "ridge must be positive and finite");
  }
  if (bandwidth && !(*bandwidth > 0.0 && std::isfinite(*bandwidth))) {
    throw Error(Errc::InvalidArgument, "bandwidth must be positive and finite");
  }

  KrrModel model;
  model.train_features_ = train.features;
  model.bandwidth_ = bandwidth ? *bandwidth : median_pairwise_distance(train.features).value_or(1.0);
  model.ridge_ = ridge;
  model.n_classes_ = train.n_classes;

  const Eigen::Index m = train.features.rows();
  Eigen::MatrixXd system = rbf_gram(train.features, model.bandwidth_);
  system.diagonal().array() += ridge;
  Eigen::MatrixXd targets = Eigen::MatrixXd::Zero(m, train.n_classes);
  for (Eigen::Index i = 0; i < m; ++i) targets(i, train.labels[static_cast<std::size_t>(i)]) = 1.0;

  const Eigen::LLT<Eigen::MatrixXd> llt(system);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::SingularSystem, "K + ridge*I is not positive definite");
  }
  model.alpha_ = llt.solve(targets);
  // one step of iterative refinement
  model.alpha_ += llt.solve(targets - system * model.alpha_);
  if (!model.alpha_.allFinite()) throw Error(Errc::SingularSystem, "non-finite dual coefficients");
  return model;
}

Eigen::VectorXd KrrModel::scores(std::span<const double> query) const {
  check_query(train_features_, query);
  const double scale = 1.0 / (2.0 * bandwidth_ * bandwidth_);
  Eigen::VectorXd kq(train_features_.rows());
  for (Eigen::Index i = 0; i < kq.size(); ++i) {
    kq[i] = std::exp(-simd::squared_distance(query, row_span(train_features_, i)) * scale);
  }
  return alpha_.transpose() * kq;
}

int KrrModel::predict(std::span<const double> query) const {
  const Eigen::VectorXd s = scores(query);
  const double top = s.maxCoeff();
  const double slack = 1e-12 * std::max(1.0, std::abs(top));
  for (Eigen::Index c = 0; c < s.size(); ++c) {
    if (s[c] >= top - slack) return static_cast<int>(c);
  }
  return 0;
}

double accuracy(std::span<const int> predictions, std::span<const int> truth) {
  if (predictions.size() != truth.size()) {
    throw Error(Errc::LengthMismatch, std::to_string(predictions.size()) + " predictions vs " +
                                          std::to_string(truth.size()) + " labels");
  }
  if (truth.empty()) throw Error(Errc::InvalidArgument, "accuracy of an empty test set");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) correct += predictions[i] == truth[i] ? 1 : 0;
  return static_cast<double>(correct) / static_cast<double>(truth.size());
}

std::string_view short_name(ClassifierKind c) noexcept {
  return c == ClassifierKind::Knn ? "knn" : "krr";
}

ClassifierKind parse_classifier(std::string_view tag) {
  if (tag == "knn") return ClassifierKind::Knn;
  if (tag == "krr") return ClassifierKind::Krr;
  throw Error(Errc::InvalidArgument, "unknown classifier '" + std::string(tag) + "'");
}

}  // namespace hyperlap
