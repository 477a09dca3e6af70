#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hyperlap/error.hpp"
#include "hyperlap/simd/kernels.hpp"

using namespace hyperlap;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 3.0);
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

class KernelEquivalence : public ::testing::TestWithParam<simd::Backend> {
 protected:
  void SetUp() override {
    if (!simd::backend_supported(GetParam())) GTEST_SKIP() << "backend not supported on this CPU";
  }
  const simd::KernelTable& table() const { return simd::kernels_for(GetParam()); }
  const simd::KernelTable& reference() const { return simd::scalar_kernels(); }
};

}  // namespace

TEST_P(KernelEquivalence, SquaredDistanceMatchesScalarAtEveryTailLength) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 67; ++n) {
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);
    const double want = reference().squared_distance(a.data(), b.data(), n);
    const double got = table().squared_distance(a.data(), b.data(), n);
    EXPECT_NEAR(got, want, 1e-12 * std::max(1.0, want)) << "n=" << n;
  }
}

TEST_P(KernelEquivalence, DotMatchesScalar) {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 31u, 1024u, 1027u}) {
    const auto a = random_vector(rng, n);
    const auto b = random_vector(rng, n);
    double mag = 0.0;
    for (std::size_t i = 0; i < n; ++i) mag += std::abs(a[i] * b[i]);
    EXPECT_NEAR(table().dot(a.data(), b.data(), n), reference().dot(a.data(), b.data(), n),
                1e-13 * std::max(1.0, mag))
        << "n=" << n;
  }
}

TEST_P(KernelEquivalence, RotateMatchesScalar) {
  std::mt19937_64 rng(13);
  const double angle = 0.37;
  const double c = std::cos(angle), s = std::sin(angle);
  for (std::size_t n : {1u, 2u, 5u, 8u, 13u, 200u}) {
    auto x = random_vector(rng, n), y = random_vector(rng, n);
    auto xr = x, yr = y;
    table().rotate(x.data(), y.data(), n, c, s);
    reference().rotate(xr.data(), yr.data(), n, c, s);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(x[i], xr[i], 1e-14 * std::max(1.0, std::abs(xr[i])));
      EXPECT_NEAR(y[i], yr[i], 1e-14 * std::max(1.0, std::abs(yr[i])));
    }
  }
}

TEST_P(KernelEquivalence, RotationPreservesNorm) {
  std::mt19937_64 rng(17);
  auto x = random_vector(rng, 50), y = random_vector(rng, 50);
  double before = 0.0, after = 0.0;
  for (std::size_t i = 0; i < 50; ++i) before += x[i] * x[i] + y[i] * y[i];
  table().rotate(x.data(), y.data(), 50, std::cos(1.1), std::sin(1.1));
  for (std::size_t i = 0; i < 50; ++i) after += x[i] * x[i] + y[i] * y[i];
  EXPECT_NEAR(after, before, 1e-12 * before);
}

INSTANTIATE_TEST_SUITE_P(Backends, KernelEquivalence,
                         ::testing::Values(simd::Backend::Scalar, simd::Backend::Avx2),
                         [](const auto& info) { return std::string(simd::to_string(info.param)); });

TEST(KernelDispatch, ScalarAlwaysAvailableAndSelectable) {
  const auto previous = simd::active().backend;
  simd::set_backend(simd::Backend::Scalar);
  EXPECT_EQ(simd::active().backend, simd::Backend::Scalar);
  const std::vector<double> a{0.0, 0.0}, b{3.0, 4.0};
  EXPECT_DOUBLE_EQ(simd::squared_distance(a, b), 25.0);
  simd::set_backend(previous);
}

TEST(KernelDispatch, ParsesBackendNames) {
  EXPECT_EQ(simd::parse_backend("scalar"), simd::Backend::Scalar);
  EXPECT_EQ(simd::parse_backend("avx2"), simd::Backend::Avx2);
  EXPECT_TRUE(simd::backend_supported(simd::parse_backend("auto")));
  EXPECT_THROW(simd::parse_backend("neon9000"), Error);
}

TEST(KernelDispatch, AutoPicksAvx2WhenTheCpuHasIt) {
  if (!simd::backend_supported(simd::Backend::Avx2)) GTEST_SKIP();
  EXPECT_EQ(simd::parse_backend("auto"), simd::Backend::Avx2);
}
