#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperlap/classify.hpp"
#include "hyperlap/construction.hpp"
#include "hyperlap/dataset.hpp"
#include "hyperlap/laplacian.hpp"
#include "hyperlap/spectral.hpp"

namespace hyperlap {

struct ExperimentGrid {
  std::vector<ClassifierKind> classifiers{ClassifierKind::Knn};
  std::vector<LaplacianVariant> variants{LaplacianVariant::Combinatorial,
                                         LaplacianVariant::RandomWalk,
                                         LaplacianVariant::Symmetric};
  std::vector<std::size_t> dims{20, 30, 40};
  std::size_t knn_k = 1;
  double ridge = 1e-3;
  std::optional<double> bandwidth;  // nullopt: median heuristic per cell

  std::size_t cardinality() const noexcept {
    return classifiers.size() * variants.size() * dims.size();
  }
};

struct ConstructionParams {
  HyperedgeOptions hyperedges;
  Normalization normalization = Normalization::None;
};

struct ReportRow {
  ClassifierKind classifier;
  LaplacianVariant variant;
  std::size_t dim;
  std::optional<double> accuracy;  // rounded to 4 decimals; nullopt on error
  std::size_t correct = 0;
  std::size_t total = 0;
  std::optional<double> bandwidth;  // KRR only, as resolved for the cell
  std::vector<double> spectrum_head;  // lambda_1 .. lambda_{d+1}
  std::string error;

  /// e.g. "Combinatorial Laplacian Eigenmaps (d=20) + k nearest neighbor method"
  std::string label() const;
};

struct ExperimentReport {
  std::vector<ReportRow> rows;
  ExperimentGrid grid;
  ConstructionParams construction;
  std::uint64_t seed = 0;
  std::size_t train_per_class = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  std::size_t n_classes = 0;
  std::string simd_backend;
};

/// Hypergraph over every sample (train and test alike) and its spectrum for
/// one Laplacian variant. Only features go in; labels never reach this step.
SpectralDecomposition transductive_spectrum(const RowMatrix& samples,
                                            const ConstructionParams& params,
                                            LaplacianVariant variant);

/// Runs the grid in order classifier -> variant -> dim. Each cell embeds all
/// samples jointly, fits on the embedded train rows and scores the embedded
/// test rows. A failing cell becomes an error row; the grid always completes.
ExperimentReport run_experiment(const LabeledDataset& ds, const ExperimentGrid& grid,
                                const ConstructionParams& params);

nlohmann::ordered_json to_json(const ExperimentReport& report);
std::string to_markdown(const ExperimentReport& report);

}  // namespace hyperlap
