#include "hyperlap/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "hyperlap/error.hpp"

namespace hyperlap {

std::vector<std::string> LabeledDataset::label_set() const {
  const std::set<std::string> unique(labels.begin(), labels.end());
  return {unique.begin(), unique.end()};
}

std::vector<int> LabeledDataset::label_ids() const {
  const auto set = label_set();
  std::vector<int> ids(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ids[i] = static_cast<int>(std::lower_bound(set.begin(), set.end(), labels[i]) - set.begin());
  }
  return ids;
}

std::vector<std::size_t> LabeledDataset::indices(Split which) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < split.size(); ++i) {
    if (split[i] == which) out.push_back(i);
  }
  return out;
}

Eigen::RowVectorXd flatten_image(const Eigen::MatrixXd& image) {
  if (image.size() == 0) throw Error(Errc::InvalidArgument, "image has no pixels");
  Eigen::RowVectorXd out(image.size());
  for (Eigen::Index r = 0; r < image.rows(); ++r) {
    for (Eigen::Index c = 0; c < image.cols(); ++c) out[r * image.cols() + c] = image(r, c);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

}  // namespace

LabeledDataset parse_csv(std::istream& in, std::string_view source) {
  LabeledDataset ds;
  std::vector<double> values;
  std::size_t width = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    const auto where = (source.empty() ? std::string("line ") : std::string(source) + ":") +
                       std::to_string(line_no);
    if (fields.size() < 2) throw Error(Errc::MalformedRow, where + ": expected label and features");
    if (fields[0].empty()) throw Error(Errc::MalformedRow, where + ": empty label");
    const std::size_t d = fields.size() - 1;
    if (width == 0) {
      width = d;
    } else if (d != width) {
      throw Error(Errc::InconsistentWidth, where + ": " + std::to_string(d) +
                                               " features, expected " + std::to_string(width));
    }
    for (std::size_t f = 1; f < fields.size(); ++f) {
      const auto field = fields[f];
      double v = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size() ||
          !std::isfinite(v)) {
        throw Error(Errc::MalformedRow,
                    where + ": field " + std::to_string(f + 1) + " is not a finite number");
      }
      values.push_back(v);
    }
    ds.labels.emplace_back(fields[0]);
  }
  if (ds.labels.empty()) {
    throw Error(Errc::EmptyFile, (source.empty() ? std::string("input") : std::string(source)) +
                                     " has no data rows");
  }

  ds.samples = Eigen::Map<const RowMatrix>(values.data(), static_cast<Eigen::Index>(ds.labels.size()),
                                           static_cast<Eigen::Index>(width));
  return ds;
}

LabeledDataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open '" + path + "'");
  return parse_csv(in, path);
}

LabeledDataset stratified_split(LabeledDataset ds, std::size_t train_per_class,
                                std::uint64_t seed) {
  if (train_per_class == 0) throw Error(Errc::InvalidArgument, "train_per_class must be >= 1");
  std::map<std::string, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < ds.labels.size(); ++i) by_class[ds.labels[i]].push_back(i);

  std::mt19937_64 rng(seed);
  ds.split.assign(ds.labels.size(), Split::Test);
  for (auto& [label, members] : by_class) {
    if (members.size() <= train_per_class) {
      throw Error(Errc::InsufficientClassSize,
                  "class '" + label + "' has " + std::to_string(members.size()) +
                      " samples, needs at least " + std::to_string(train_per_class + 1));
    }
    // Fisher-Yates with an explicit draw so the split does not depend on the
    // standard library's shuffle/distribution implementation.
    for (std::size_t i = members.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(rng() % (i + 1));
      std::swap(members[i], members[j]);
    }
    for (std::size_t t = 0; t < train_per_class; ++t) ds.split[members[t]] = Split::Train;
  }
  ds.seed = seed;
  ds.train_per_class = train_per_class;
  return ds;
}

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::None: return "none";
    case Normalization::Unit: return "unit";
    case Normalization::ZScore: return "zscore";
  }
  return "?";
}

Normalization parse_normalization(std::string_view tag) {
  if (tag == "none") return Normalization::None;
  if (tag == "unit") return Normalization::Unit;
  if (tag == "zscore") return Normalization::ZScore;
  throw Error(Errc::InvalidArgument, "unknown normalization '" + std::string(tag) + "'");
}

RowMatrix normalize(const RowMatrix& samples, Normalization mode) {
  RowMatrix out = samples;
  switch (mode) {
    case Normalization::None:
      break;
    case Normalization::Unit:
      for (Eigen::Index i = 0; i < out.rows(); ++i) {
        const double norm = out.row(i).norm();
        if (norm > 0.0) out.row(i) /= norm;
      }
      break;
    case Normalization::ZScore: {
      const Eigen::RowVectorXd mean = out.colwise().mean();
      out.rowwise() -= mean;
      const Eigen::RowVectorXd sd =
          (out.colwise().squaredNorm() / static_cast<double>(out.rows())).cwiseSqrt();
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        if (sd[c] > 0.0) out.col(c) /= sd[c];
      }
      break;
    }
  }
  return out;
}

}  // namespace hyperlap
