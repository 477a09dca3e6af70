#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hyperlap/error.hpp"
#include "hyperlap/hypergraph.hpp"
#include "hyperlap/hypergraph_json.hpp"
#include "support/generators.hpp"

using namespace hyperlap;

namespace {

Errc error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected hyperlap::Error";
  return Errc::InvalidArgument;
}

// 8 vertices, 3 hyperedges, every vertex covered.
Hypergraph eight_vertex_fixture() {
  return Hypergraph::build(8, {{0, 1, 2}, {2, 3, 4, 5}, {5, 6, 7}});
}

}  // namespace

TEST(Hypergraph, SingleCoveringHyperedge) {
  const auto g = Hypergraph::build(3, {{0, 1, 2}}, {1.0});
  EXPECT_EQ(g.n_hyperedges(), 1u);
  for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(g.incidence(v, 0), 1);
}

TEST(Hypergraph, EightVertexThreeHyperedgeFixture) {
  const auto g = eight_vertex_fixture();
  EXPECT_EQ(g.n_vertices(), 8u);
  EXPECT_EQ(g.n_hyperedges(), 3u);
  EXPECT_EQ(connected_components(g), 1u);
}

TEST(Hypergraph, RejectsInvalidStructure) {
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0}}, {1.0}); }), Errc::SingletonHyperedge);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 0}, {1, 2}}); }), Errc::SingletonHyperedge);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 1, 3}}); }), Errc::OutOfRangeVertex);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 1, 2}}, {0.0}); }), Errc::NonPositiveWeight);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 1, 2}}, {-1.0}); }), Errc::NonPositiveWeight);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 1, 2}}, {std::nan("")}); }),
            Errc::NonPositiveWeight);
  EXPECT_EQ(error_of([] { Hypergraph::build(4, {{0, 1, 2}}); }), Errc::IsolatedVertex);
  EXPECT_EQ(error_of([] { Hypergraph::build(3, {{0, 1, 2}}, {1.0, 2.0}); }), Errc::LengthMismatch);
}

TEST(Hypergraph, DuplicateMembersCollapse) {
  const auto g = Hypergraph::build(3, {{2, 0, 2, 1, 0}});
  EXPECT_EQ(g.hyperedge(0), (VertexSet{0, 1, 2}));
  EXPECT_DOUBLE_EQ(degrees(g).hyperedge[0], 3.0);
}

TEST(Degrees, HandExamples) {
  auto d = degrees(Hypergraph::build(3, {{0, 1, 2}}, {1.0}));
  EXPECT_EQ(d.vertex, Eigen::Vector3d(1, 1, 1));
  EXPECT_EQ(d.hyperedge, Eigen::VectorXd::Constant(1, 3.0));

  // d(v) = [2, 2+3, 3], d(e) = [2, 2]
  d = degrees(Hypergraph::build(3, {{0, 1}, {1, 2}}, {2.0, 3.0}));
  EXPECT_EQ(d.vertex, Eigen::Vector3d(2, 5, 3));
  EXPECT_EQ(d.hyperedge, Eigen::Vector2d(2, 2));

  d = degrees(Hypergraph::build(4, {{0, 1}, {2, 3}}, {1.0, 1.0}));
  EXPECT_EQ(d.vertex, Eigen::Vector4d(1, 1, 1, 1));
  EXPECT_EQ(d.hyperedge, Eigen::Vector2d(2, 2));
}

TEST(Incidence, DenseTranscription) {
  EXPECT_EQ(incidence_dense(Hypergraph::build(3, {{0, 1, 2}})), Eigen::MatrixXd::Ones(3, 1));
  Eigen::MatrixXd want(3, 2);
  want << 1, 0, 1, 1, 0, 1;
  EXPECT_EQ(incidence_dense(Hypergraph::build(3, {{0, 1}, {1, 2}})), want);
}

TEST(Incidence, PropertiesOnRandomHypergraphs) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testkit::random_hypergraph(rng);
    const auto h = incidence_dense(g);
    const auto d = degrees(g);
    const Eigen::Map<const Eigen::VectorXd> w(g.weights().data(),
                                              static_cast<Eigen::Index>(g.weights().size()));

    EXPECT_TRUE((h.array() == 0.0 || h.array() == 1.0).all());
    for (Eigen::Index e = 0; e < h.cols(); ++e) {
      // brute-force membership count
      double count = 0;
      for (std::size_t v = 0; v < g.n_vertices(); ++v) count += g.incidence(v, static_cast<std::size_t>(e));
      EXPECT_EQ(h.col(e).sum(), count);
      EXPECT_EQ(d.hyperedge[e], count);
    }
    EXPECT_LE(((h * w) - d.vertex).cwiseAbs().maxCoeff(), 1e-12 * d.vertex.maxCoeff());

    // double counting: sum_v d(v) = sum_e w(e) |e|
    const double lhs = d.vertex.sum();
    const double rhs = w.dot(d.hyperedge);
    EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
  }
}

TEST(Degrees, InvariantUnderHyperedgeReordering) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testkit::random_hypergraph(rng);
    std::vector<std::size_t> perm(g.n_hyperedges());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> edges;
    std::vector<double> weights;
    for (auto e : perm) {
      edges.push_back(g.hyperedge(e));
      weights.push_back(g.weight(e));
    }
    const auto permuted = Hypergraph::build(g.n_vertices(), edges, weights);
    EXPECT_LE((degrees(g).vertex - degrees(permuted).vertex).cwiseAbs().maxCoeff(),
              1e-15 * degrees(g).vertex.maxCoeff());
  }
}

TEST(Components, UnionFind) {
  EXPECT_EQ(connected_components(Hypergraph::build(4, {{0, 1}, {2, 3}})), 2u);
  EXPECT_EQ(connected_components(Hypergraph::build(4, {{0, 1}, {2, 3}, {1, 2}})), 1u);
  EXPECT_EQ(connected_components(Hypergraph::build(6, {{0, 5}, {1, 4}, {2, 3}})), 3u);
}

TEST(HypergraphJson, RoundTripsRandomInstances) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = testkit::random_hypergraph(rng);
    EXPECT_EQ(hypergraph_from_json(nlohmann::json::parse(to_json(g).dump())), g);
  }
}

TEST(HypergraphJson, SchemaAndDefaults) {
  const auto doc = nlohmann::json::parse(R"({"n_vertices": 3, "hyperedges": [[0, 1], [1, 2]]})");
  const auto g = hypergraph_from_json(doc);
  EXPECT_EQ(g.weight(0), 1.0);
  EXPECT_EQ(g.weight(1), 1.0);

  const auto out = to_json(Hypergraph::build(3, {{0, 1, 2}}, {2.5}));
  EXPECT_EQ(out.at("n_vertices"), 3);
  EXPECT_EQ(out.at("hyperedges"), nlohmann::json::parse("[[0,1,2]]"));
  EXPECT_EQ(out.at("weights"), nlohmann::json::parse("[2.5]"));

  EXPECT_EQ(error_of([] { hypergraph_from_json(nlohmann::json::parse(R"({"hyperedges": []})")); }),
            Errc::InvalidArgument);
  EXPECT_EQ(error_of([] {
              hypergraph_from_json(
                  nlohmann::json::parse(R"({"n_vertices": 2, "hyperedges": [[0]], "weights": [1]})"));
            }),
            Errc::SingletonHyperedge);
}
