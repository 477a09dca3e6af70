// hyperlap: hypergraph Laplacian eigenmaps over labelled feature vectors.
//
//   hyperlap embed --input faces.csv --laplacian sym --dim 20 --output emb.csv
//   hyperlap eval  --input faces.csv --train-per-class 8 --classifier knn --report r.json
//
// Exit codes: 0 success, 1 input error, 2 numerical failure.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperlap/construction.hpp"
#include "hyperlap/dataset.hpp"
#include "hyperlap/error.hpp"
#include "hyperlap/experiment.hpp"
#include "hyperlap/hypergraph_json.hpp"
#include "hyperlap/simd/kernels.hpp"
#include "hyperlap/spectral.hpp"

namespace {

using namespace hyperlap;

constexpr int kExitInput = 1;
constexpr int kExitNumerical = 2;

std::optional<double> parse_auto_or_positive(const std::string& text, const char* flag) {
  if (text == "auto") return std::nullopt;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size() || !(v > 0.0)) {
    throw Error(Errc::InvalidArgument, std::string(flag) + " expects a positive number or 'auto'");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct ConstructionFlags {
  std::size_t knn_hyperedge = 5;
  std::string edge_weight = "unit";
  std::string sigma = "auto";
  std::string normalize = "none";

  void attach(CLI::App& app) {
    app.add_option("--knn-hyperedge", knn_hyperedge, "Neighbours per hyperedge (k_h)")
        ->capture_default_str();
    app.add_option("--edge-weight", edge_weight, "Hyperedge weighting")
        ->check(CLI::IsMember({"unit", "gaussian"}))
        ->capture_default_str();
    app.add_option("--sigma", sigma, "Gaussian edge-weight scale, or 'auto' (median)")
        ->capture_default_str();
    app.add_option("--normalize", normalize, "Feature preprocessing")
        ->check(CLI::IsMember({"none", "unit", "zscore"}))
        ->capture_default_str();
  }

  ConstructionParams resolve() const {
    ConstructionParams p;
    p.hyperedges.k_h = knn_hyperedge;
    p.hyperedges.weighting = parse_edge_weighting(edge_weight);
    p.hyperedges.sigma = parse_auto_or_positive(sigma, "--sigma");
    p.normalization = parse_normalization(normalize);
    return p;
  }
};

struct EmbedFlags {
  std::string input;
  std::string hypergraph_in;
  std::string hypergraph_out;
  std::string laplacian = "comb";
  std::size_t dim = 0;
  std::string auto_rule;
  std::string output;
  ConstructionFlags construction;
};

struct EvalFlags {
  std::string input;
  std::size_t train_per_class = 8;
  std::uint64_t seed = 42;
  std::string grid_dims = "20,30,40";
  std::string laplacians = "comb,rw,sym";
  std::string classifier = "knn";
  std::size_t knn_k = 1;
  double ridge = 1e-3;
  std::string bandwidth = "auto";
  std::string report;
  std::string markdown;
  ConstructionFlags construction;
};

int run_embed(const EmbedFlags& f) {
  std::optional<Hypergraph> graph;
  if (!f.hypergraph_in.empty()) {
    graph = read_hypergraph(f.hypergraph_in);
  } else {
    const auto ds = load_csv(f.input);
    const auto params = f.construction.resolve();
    graph = knn_hyperedges(PointCloud(normalize(ds.samples, params.normalization)),
                           params.hyperedges);
  }
  if (!f.hypergraph_out.empty()) write_hypergraph(f.hypergraph_out, *graph);

  const auto variant = parse_variant(f.laplacian);
  const auto embedding = f.auto_rule.empty()
                             ? eigenmap(*graph, variant, f.dim)
                             : eigenmap(*graph, variant, parse_dimension_rule(f.auto_rule));

  std::ofstream out(f.output);
  if (!out) throw Error(Errc::Io, "cannot open '" + f.output + "' for writing");
  write_embedding_csv(out, embedding);
  std::cerr << "embedded " << embedding.coordinates.rows() << " vertices into k=" << embedding.k
            << " dimensions (" << short_name(variant) << ")\n";
  return 0;
}

int run_eval(const EvalFlags& f) {
  ExperimentGrid grid;
  grid.classifiers.clear();
  for (const auto& c : split_list(f.classifier)) grid.classifiers.push_back(parse_classifier(c));
  grid.variants.clear();
  for (const auto& v : split_list(f.laplacians)) grid.variants.push_back(parse_variant(v));
  grid.dims.clear();
  for (const auto& d : split_list(f.grid_dims)) {
    std::size_t value = 0;
    const auto res = std::from_chars(d.data(), d.data() + d.size(), value);
    if (res.ec != std::errc{} || res.ptr != d.data() + d.size()) {
      throw Error(Errc::InvalidArgument, "--grid-dims entry '" + d + "' is not an integer");
    }
    grid.dims.push_back(value);
  }
  if (grid.classifiers.empty() || grid.variants.empty() || grid.dims.empty()) {
    throw Error(Errc::InvalidArgument, "empty experiment grid");
  }
  grid.knn_k = f.knn_k;
  grid.ridge = f.ridge;
  grid.bandwidth = parse_auto_or_positive(f.bandwidth, "--bandwidth");

  const auto ds = stratified_split(load_csv(f.input), f.train_per_class, f.seed);
  const auto report = run_experiment(ds, grid, f.construction.resolve());

  std::ofstream json_out(f.report);
  if (!json_out) throw Error(Errc::Io, "cannot open '" + f.report + "' for writing");
  json_out << to_json(report).dump(2) << '\n';

  const auto table = to_markdown(report);
  if (!f.markdown.empty()) {
    std::ofstream md(f.markdown);
    if (!md) throw Error(Errc::Io, "cannot open '" + f.markdown + "' for writing");
    md << table;
  }
  std::cout << table;

  std::size_t failed = 0;
  for (const auto& row : report.rows) {
    if (!row.accuracy) {
      ++failed;
      std::cerr << "cell failed: " << row.label() << ": " << row.error << '\n';
    }
  }
  if (failed) std::cerr << failed << " of " << report.rows.size() << " cells failed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Laplacian eigenmaps and classification experiments"};
  app.set_config("--config", "", "TOML-style config file; command-line flags take precedence");
  app.require_subcommand(1);
  std::string simd_backend = "auto";
  app.add_option("--simd", simd_backend, "Kernel backend")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();

  EmbedFlags embed;
  auto* embed_cmd = app.add_subcommand("embed", "Embed the samples of a CSV (or a hypergraph)");
  auto* input_opt = embed_cmd->add_option("--input", embed.input, "Label-first CSV");
  auto* hg_in_opt =
      embed_cmd->add_option("--hypergraph-in", embed.hypergraph_in, "Hypergraph JSON to embed");
  input_opt->excludes(hg_in_opt);
  embed_cmd->add_option("--hypergraph-out", embed.hypergraph_out, "Write the hypergraph as JSON");
  embed_cmd->add_option("--laplacian", embed.laplacian, "Laplacian variant")
      ->check(CLI::IsMember({"comb", "rw", "sym"}))
      ->capture_default_str();
  auto* dim_opt = embed_cmd->add_option("--dim", embed.dim, "Embedding dimension k");
  auto* auto_opt = embed_cmd->add_option("--auto", embed.auto_rule, "Choose k from the spectrum")
                       ->check(CLI::IsMember({"components", "gap-diff", "gap-ratio"}));
  dim_opt->excludes(auto_opt);
  embed_cmd->add_option("--output", embed.output, "Embedding CSV")->required();
  embed.construction.attach(*embed_cmd);

  EvalFlags eval;
  auto* eval_cmd = app.add_subcommand("eval", "Run the train/test accuracy grid");
  eval_cmd->add_option("--input", eval.input, "Label-first CSV")->required();
  eval_cmd->add_option("--train-per-class", eval.train_per_class)->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed, "Split seed")->capture_default_str();
  eval_cmd->add_option("--grid-dims", eval.grid_dims, "Comma-separated dimensions")
      ->capture_default_str();
  eval_cmd->add_option("--laplacians", eval.laplacians, "Comma-separated variants")
      ->capture_default_str();
  eval_cmd->add_option("--classifier", eval.classifier, "knn, krr, or knn,krr")
      ->capture_default_str();
  eval_cmd->add_option("--knn-k", eval.knn_k, "Neighbours for the kNN classifier")
      ->capture_default_str();
  eval_cmd->add_option("--ridge", eval.ridge, "KRR regularisation")->capture_default_str();
  eval_cmd->add_option("--bandwidth", eval.bandwidth, "KRR RBF bandwidth, or 'auto' (median)")
      ->capture_default_str();
  eval_cmd->add_option("--report", eval.report, "JSON report path")->required();
  eval_cmd->add_option("--markdown", eval.markdown, "Markdown table path");
  eval.construction.attach(*eval_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    simd::set_backend(simd::parse_backend(simd_backend));
    if (embed_cmd->parsed()) {
      if (embed.input.empty() && embed.hypergraph_in.empty()) {
        throw Error(Errc::InvalidArgument, "embed needs --input or --hypergraph-in");
      }
      if (embed.auto_rule.empty() && embed.dim == 0) {
        throw Error(Errc::InvalidArgument, "embed needs --dim or --auto");
      }
      return run_embed(embed);
    }
    return run_eval(eval);
  } catch (const Error& e) {
    std::cerr << "hyperlap: " << e.what() << '\n';
    return is_numerical(e.code()) ? kExitNumerical : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "hyperlap: " << e.what() << '\n';
    return kExitInput;
  }
}
