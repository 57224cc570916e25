#include "qwalk/statistics.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qwalk/ensemble.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

Distribution FromPairs(int half_width, std::initializer_list<std::pair<int, double>> sites) {
  Distribution d = Distribution::Zeros(half_width);
  for (auto [x, p] : sites) d.probability[static_cast<std::size_t>(x + half_width)] = p;
  return d;
}

TEST(Variance, PointMass) { EXPECT_EQ(Variance(FromPairs(3, {{0, 1.0}})), 0.0); }

TEST(Variance, TwoPoint) { EXPECT_DOUBLE_EQ(Variance(FromPairs(3, {{-1, 0.5}, {1, 0.5}})), 1.0); }

TEST(Variance, BalancedTwoStep) {
  EXPECT_DOUBLE_EQ(Variance(FromPairs(2, {{-2, 0.25}, {0, 0.5}, {2, 0.25}})), 2.0);
}

TEST(Variance, UsesCentralMoment) {
  // Shifted point pair: mean 3, variance 1.
  EXPECT_NEAR(Variance(FromPairs(5, {{2, 0.5}, {4, 0.5}})), 1.0, 1e-14);
}

TEST(Variance, RejectsUnnormalized) {
  EXPECT_THROW(Variance(FromPairs(2, {{0, 0.9}})), InvalidArgument);
  EXPECT_THROW(EvenCentralMoment(FromPairs(2, {{0, 1.1}}), 2), InvalidArgument);
}

TEST(EvenCentralMoment, SimpleCases) {
  EXPECT_EQ(EvenCentralMoment(FromPairs(2, {{1, 1.0}}), 2), 0.0);
  EXPECT_DOUBLE_EQ(EvenCentralMoment(FromPairs(2, {{-1, 0.5}, {1, 0.5}}), 2), 1.0);
  EXPECT_DOUBLE_EQ(EvenCentralMoment(FromPairs(3, {{-2, 0.5}, {2, 0.5}}), 3), 64.0);
  EXPECT_THROW(EvenCentralMoment(FromPairs(2, {{0, 1.0}}), 4), InvalidArgument);
}

TEST(EvenCentralMoment, GaussianFourthMoment) {
  // Integer-binned Gaussian samples; binning shifts m4 by ~sigma^2/2,
  // below the sampling tolerance at sigma = 8.
  const double sigma = 8.0;
  const int half_width = 64;
  const int n = 1'000'000;
  std::mt19937_64 gen(1234);
  std::normal_distribution<double> normal(0.0, sigma);
  Distribution d = Distribution::Zeros(half_width);
  for (int i = 0; i < n; ++i) {
    const int x = static_cast<int>(std::lround(normal(gen)));
    if (std::abs(x) <= half_width) d.probability[static_cast<std::size_t>(x + half_width)] += 1.0;
  }
  const double total = d.Total();
  for (double& p : d.probability) p /= total;
  // SE(m4) = sqrt(96) sigma^4 / sqrt(n) ~ 1%; allow 3 SE.
  EXPECT_NEAR(EvenCentralMoment(d, 2) / (3.0 * std::pow(sigma, 4)), 1.0, 0.03);
}

TEST(Similarity, IdentityAndDisjoint) {
  const Distribution a = FromPairs(2, {{-2, 0.25}, {0, 0.5}, {2, 0.25}});
  const Distribution b = FromPairs(2, {{-1, 0.5}, {1, 0.5}});
  EXPECT_NEAR(Similarity(a, a), 1.0, 1e-15);
  EXPECT_EQ(Similarity(a, b), 0.0);
  EXPECT_THROW(Similarity(a, FromPairs(3, {{0, 1.0}})), InvalidArgument);
}

TEST(Similarity, IndependentEnsemblesAgree) {
  DisorderSpec spec;
  spec.p = 0.2;
  spec.maps = 10000;
  spec.recorded_steps = {20};
  spec.master_seed = 1;
  const Distribution first = RunEnsemble(spec).AtStep(20);
  spec.master_seed = 2;
  const Distribution second = RunEnsemble(spec).AtStep(20);
  EXPECT_GT(Similarity(first, second), 0.99);
}

TEST(SampleCounts, ZeroEvents) {
  const CountHistogram h = SampleCounts(FromPairs(2, {{0, 1.0}}), 0, 1);
  EXPECT_EQ(h.total_events, 0u);
  for (auto c : h.counts) EXPECT_EQ(c, 0u);
}

TEST(SampleCounts, PointMass) {
  const CountHistogram h = SampleCounts(FromPairs(2, {{1, 1.0}}), 100, 1);
  EXPECT_EQ(h.counts[3], 100u);
}

TEST(SampleCounts, MultinomialBounds) {
  const Distribution d = FromPairs(2, {{-2, 0.25}, {0, 0.5}, {2, 0.25}});
  const std::uint64_t n = 1'000'000;
  const CountHistogram h = SampleCounts(d, n, 77);
  std::uint64_t sum = 0;
  for (auto c : h.counts) sum += c;
  EXPECT_EQ(sum, n);
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double q = d.probability[i];
    const double freq = static_cast<double>(h.counts[i]) / static_cast<double>(n);
    EXPECT_NEAR(freq, q, 4.0 * std::sqrt(q * (1 - q) / static_cast<double>(n)) + 1e-15);
  }
}

TEST(SampleCounts, Deterministic) {
  const Distribution d = FromPairs(2, {{-2, 0.25}, {0, 0.5}, {2, 0.25}});
  EXPECT_EQ(SampleCounts(d, 5000, 3).counts, SampleCounts(d, 5000, 3).counts);
}

}  // namespace
}  // namespace qwalk
