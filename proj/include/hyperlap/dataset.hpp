#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hyperlap/matrix.hpp"

namespace hyperlap {

enum class Split : std::uint8_t { Train, Test };

struct LabeledDataset {
  RowMatrix samples;                // n x D
  std::vector<std::string> labels;  // length n
  std::vector<Split> split;         // empty until stratified_split()
  std::uint64_t seed = 0;
  std::size_t train_per_class = 0;

  std::size_t size() const noexcept { return labels.size(); }
  bool is_split() const noexcept { return !split.empty(); }

  /// Distinct labels in lexicographic order; index = class id.
  std::vector<std::string> label_set() const;
  /// Class id of every sample under label_set().
  std::vector<int> label_ids() const;
  std::vector<std::size_t> indices(Split which) const;
};

/// Row-major flattening of an image: pixel (r, c) lands at r * cols + c.
Eigen::RowVectorXd flatten_image(const Eigen::MatrixXd& image);

/// Label-first CSV: "label,x1,...,xD" per line; blank lines are ignored.
/// Throws MalformedRow / InconsistentWidth (with the 1-based line number)
/// or EmptyFile.
LabeledDataset parse_csv(std::istream& in, std::string_view source = {});
LabeledDataset load_csv(const std::string& path);

/// Marks exactly train_per_class samples of each class as Train (seeded
/// Fisher-Yates shuffle over the class's samples in file order), the rest as
/// Test. Throws InsufficientClassSize when a class has <= train_per_class
/// samples.
LabeledDataset stratified_split(LabeledDataset ds, std::size_t train_per_class,
                                std::uint64_t seed);

enum class Normalization { None, Unit, ZScore };
std::string_view to_string(Normalization n) noexcept;
Normalization parse_normalization(std::string_view tag);

/// Unit: each row scaled to unit L2 norm (zero rows untouched).
/// ZScore: each column centred and scaled by its standard deviation (constant
/// columns are only centred).
RowMatrix normalize(const RowMatrix& samples, Normalization mode);

}  // namespace hyperlap
