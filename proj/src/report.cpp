#include <cstdio>

#include "hyperlap/experiment.hpp"

namespace hyperlap {

nlohmann::ordered_json to_json(const ExperimentReport& report) {
  using nlohmann::ordered_json;
  const auto& grid = report.grid;
  const auto& hyper = report.construction.hyperedges;

  ordered_json meta;
  meta["seed"] = report.seed;
  meta["train_per_class"] = report.train_per_class;
  meta["n_train"] = report.n_train;
  meta["n_test"] = report.n_test;
  meta["n_classes"] = report.n_classes;
  meta["knn_hyperedge"] = hyper.k_h;
  meta["edge_weight"] = std::string(to_string(hyper.weighting));
  meta["sigma"] = hyper.sigma ? ordered_json(*hyper.sigma) : ordered_json("auto");
  meta["normalize"] = std::string(to_string(report.construction.normalization));
  meta["knn_k"] = grid.knn_k;
  meta["ridge"] = grid.ridge;
  meta["bandwidth"] = grid.bandwidth ? ordered_json(*grid.bandwidth) : ordered_json("auto");
  meta["simd"] = report.simd_backend;
  meta["grid_cells"] = grid.cardinality();

  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json r;
    r["label"] = row.label();
    r["classifier"] = std::string(short_name(row.classifier));
    r["laplacian"] = std::string(short_name(row.variant));
    r["dim"] = row.dim;
    ordered_json hp;
    if (row.classifier == ClassifierKind::Knn) {
      hp["k"] = grid.knn_k;
    } else {
      hp["ridge"] = grid.ridge;
      hp["bandwidth"] = row.bandwidth ? ordered_json(*row.bandwidth) : ordered_json(nullptr);
      hp["bandwidth_rule"] = grid.bandwidth ? "fixed" : "median";
    }
    r["hyperparameters"] = hp;
    if (row.accuracy) {
      r["accuracy"] = *row.accuracy;
      r["correct"] = row.correct;
      r["total"] = row.total;
      r["spectrum_head"] = row.spectrum_head;
    } else {
      r["accuracy"] = nullptr;
      r["error"] = row.error;
    }
    rows.push_back(std::move(r));
  }

  ordered_json doc;
  doc["metadata"] = std::move(meta);
  doc["rows"] = std::move(rows);
  return doc;
}

std::string to_markdown(const ExperimentReport& report) {
  std::size_t width = std::string("Method").size();
  for (const auto& row : report.rows) width = std::max(width, row.label().size());

  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  std::string out = "| " + pad("Method", width) + " | Accuracy |\n";
  out += "|" + std::string(width + 2, '-') + "|----------|\n";
  for (const auto& row : report.rows) {
    std::string cell = "error";
    if (row.accuracy) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.4f", *row.accuracy);
      cell = buf;
    }
    out += "| " + pad(row.label(), width) + " | " + pad(cell, 8) + " |\n";
  }
  return out;
}

}  // namespace hyperlap
