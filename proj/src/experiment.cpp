#include "hyperlap/experiment.hpp"

#include <cmath>
#include <map>
#include <set>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"

namespace hyperlap {

std::string ReportRow::label() const {
  std::string out(display_name(variant));
  out += " Laplacian Eigenmaps (d=" + std::to_string(dim) + ") + ";
  out += classifier == ClassifierKind::Knn ? "k nearest neighbor method"
                                           : "kernel ridge regression method";
  return out;
}

SpectralDecomposition transductive_spectrum(const RowMatrix& samples,
                                            const ConstructionParams& params,
                                            LaplacianVariant variant) {
  const PointCloud cloud(normalize(samples, params.normalization));
  return laplacian_spectrum(knn_hyperedges(cloud, params.hyperedges), variant);
}

namespace {

RowMatrix gather_rows(const RowMatrix& x, const std::vector<std::size_t>& idx) {
  RowMatrix out(static_cast<Eigen::Index>(idx.size()), x.cols());
  for (std::size_t r = 0; r < idx.size(); ++r) out.row(static_cast<Eigen::Index>(r)) = x.row(static_cast<Eigen::Index>(idx[r]));
  return out;
}

void check_dataset(const LabeledDataset& ds, const ExperimentGrid& grid) {
  if (!ds.is_split()) throw Error(Errc::InvalidArgument, "dataset has no train/test split");
  const auto train = ds.indices(Split::Train);
  const auto test = ds.indices(Split::Test);
  if (train.empty()) throw Error(Errc::EmptyTrainingSet, "split has no training samples");
  if (test.empty()) throw Error(Errc::InvalidArgument, "split has no test samples");
  std::set<std::string> train_labels;
  for (auto i : train) train_labels.insert(ds.labels[i]);
  for (auto i : test) {
    if (!train_labels.count(ds.labels[i])) {
      throw Error(Errc::InvalidArgument, "test class '" + ds.labels[i] + "' absent from training");
    }
  }
  for (auto d : grid.dims) {
    if (d == 0 || d + 2 > ds.size()) {
      throw Error(Errc::KTooLarge, "grid dimension " + std::to_string(d) + " outside [1, n-2]");
    }
  }
}

struct SpectrumCell {
  std::optional<SpectralDecomposition> spectrum;
  std::string error;
};

}  // namespace

ExperimentReport run_experiment(const LabeledDataset& ds, const ExperimentGrid& grid,
                                const ConstructionParams& params) {
  check_dataset(ds, grid);

  ExperimentReport report;
  report.grid = grid;
  report.construction = params;
  report.seed = ds.seed;
  report.train_per_class = ds.train_per_class;
  report.simd_backend = std::string(simd::to_string(simd::active().backend));

  const auto train_idx = ds.indices(Split::Train);
  const auto test_idx = ds.indices(Split::Test);
  report.n_train = train_idx.size();
  report.n_test = test_idx.size();
  report.n_classes = ds.label_set().size();

  // One decomposition per variant serves every (classifier, dim) cell.
  std::map<LaplacianVariant, SpectrumCell> spectra;
  for (auto variant : grid.variants) {
    if (spectra.count(variant)) continue;
    SpectrumCell cell;
    try {
      cell.spectrum = transductive_spectrum(ds.samples, params, variant);
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    spectra.emplace(variant, std::move(cell));
  }

  // Labels are read only from here on.
  const auto ids = ds.label_ids();
  std::vector<int> test_truth;
  for (auto i : test_idx) test_truth.push_back(ids[i]);

  for (auto classifier : grid.classifiers) {
    for (auto variant : grid.variants) {
      for (auto dim : grid.dims) {
        ReportRow row{classifier, variant, dim, std::nullopt, 0, test_idx.size(),
                      std::nullopt, {}, {}};
        const auto& cell = spectra.at(variant);
        if (!cell.spectrum) {
          row.error = cell.error;
          report.rows.push_back(std::move(row));
          continue;
        }
        try {
          const auto& spectrum = *cell.spectrum;
          const auto head = static_cast<Eigen::Index>(std::min<std::size_t>(dim + 1, ds.size()));
          row.spectrum_head.assign(spectrum.eigenvalues.data(), spectrum.eigenvalues.data() + head);

          const auto embedding = embedding_from(spectrum, variant, dim);
          LabeledPoints train{gather_rows(embedding.coordinates, train_idx), {},
                              static_cast<int>(report.n_classes)};
          for (auto i : train_idx) train.labels.push_back(ids[i]);
          const RowMatrix test = gather_rows(embedding.coordinates, test_idx);

          std::vector<int> predicted(test_idx.size());
          if (classifier == ClassifierKind::Knn) {
            for (Eigen::Index r = 0; r < test.rows(); ++r) {
              predicted[static_cast<std::size_t>(r)] = knn_predict(train, row_span(test, r), grid.knn_k);
            }
          } else {
            const auto model = KrrModel::fit(train, grid.bandwidth, grid.ridge);
            row.bandwidth = model.bandwidth();
            for (Eigen::Index r = 0; r < test.rows(); ++r) {
              predicted[static_cast<std::size_t>(r)] = model.predict(row_span(test, r));
            }
          }
          for (std::size_t r = 0; r < predicted.size(); ++r) {
            row.correct += predicted[r] == test_truth[r] ? 1 : 0;
          }
          const double q = accuracy(predicted, test_truth);
          row.accuracy = std::round(q * 1e4) / 1e4;
        } catch (const std::exception& e) {
          row.error = e.what();
        }
        report.rows.push_back(std::move(row));
      }
    }
  }
  return report;
}

}  // namespace hyperlap
