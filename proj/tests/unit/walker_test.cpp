#include "qwalk/walker.hpp"

#include <cstdlib>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qwalk/disorder.hpp"
#include "qwalk/ensemble.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {
namespace {

std::vector<CoinLabel> Row(int half_width, CoinLabel label) {
  return std::vector<CoinLabel>(static_cast<std::size_t>(2 * half_width + 1), label);
}

TEST(WalkerState, InitialDistributionIsPointMass) {
  const WalkerState s = WalkerState::Localized(5);
  const Distribution d = ProbabilityDistribution(s);
  EXPECT_EQ(d.at(0), 1.0);
  EXPECT_EQ(d.Total(), 1.0);
  EXPECT_EQ(d.step, 0);
}

TEST(WalkerState, IdentityCoinsTranslateLeft) {
  const int T = 7;
  WalkerState s = WalkerState::Localized(T);
  const auto row = Row(T, CoinLabel::kIdentity);
  for (int t = 1; t <= T; ++t) {
    s.Advance(std::span<const CoinLabel>(row));
    const Distribution d = ProbabilityDistribution(s);
    EXPECT_EQ(d.at(-t), 1.0) << "t=" << t;
    EXPECT_EQ(s.amplitude(-t, 0), Complex(1.0, 0.0));
  }
}

TEST(WalkerState, ReflectionSendsCoinZeroRight) {
  const auto row = Row(3, CoinLabel::kReflection);
  const WalkerState s = Step(WalkerState::Localized(3), std::span<const CoinLabel>(row));
  // Reflection maps |0> to -i|1>, which then shifts right.
  EXPECT_EQ(s.amplitude(1, 1), Complex(0.0, -1.0));
  EXPECT_EQ(ProbabilityDistribution(s).at(1), 1.0);
}

TEST(WalkerState, BalancedTwoSteps) {
  const auto row = Row(2, CoinLabel::kBalanced);
  WalkerState s = WalkerState::Localized(2);
  s.Advance(std::span<const CoinLabel>(row));
  s.Advance(std::span<const CoinLabel>(row));
  const Distribution d = ProbabilityDistribution(s);
  EXPECT_NEAR(d.at(-2), 0.25, 1e-15);
  EXPECT_NEAR(d.at(0), 0.5, 1e-15);
  EXPECT_NEAR(d.at(2), 0.25, 1e-15);
  EXPECT_EQ(d.at(-1), 0.0);
  EXPECT_EQ(d.at(1), 0.0);

  // Hand computation: |0> -> (|0> - i|1>)/√2, shift, coin again, shift.
  const double r = 0.5;
  EXPECT_NEAR(std::abs(s.amplitude(-2, 0) - Complex(r, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(2, 1) - Complex(0, -r)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(0, 0) - Complex(-r, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(0, 1) - Complex(0, -r)), 0.0, 1e-15);
}

TEST(WalkerState, CapacityExceeded) {
  const auto row = Row(1, CoinLabel::kBalanced);
  WalkerState s = WalkerState::Localized(1);
  s.Advance(std::span<const CoinLabel>(row));
  EXPECT_THROW(s.Advance(std::span<const CoinLabel>(row)), CapacityError);
}

TEST(WalkerState, CoinRowMustSpanLattice) {
  const std::vector<CoinLabel> short_row(3, CoinLabel::kBalanced);
  WalkerState s = WalkerState::Localized(4);
  EXPECT_THROW(s.Advance(std::span<const CoinLabel>(short_row)), InvalidArgument);
}

TEST(WalkerState, ArbitraryOperatorsMatchLabels) {
  const int T = 4;
  std::vector<CoinOperator> ops;
  std::vector<CoinLabel> labels;
  for (int x = -T; x <= T; ++x) {
    const auto label = static_cast<CoinLabel>((x + T) % 3);
    labels.push_back(label);
    ops.push_back(MakeCoin(CoinAngle(label)));
  }
  WalkerState a = WalkerState::Localized(T);
  WalkerState b = WalkerState::Localized(T);
  for (int t = 0; t < T; ++t) {
    a.Advance(std::span<const CoinOperator>(ops));
    b.Advance(std::span<const CoinLabel>(labels));
  }
  for (int x = -T; x <= T; ++x) {
    EXPECT_NEAR(ProbabilityDistribution(a).at(x), ProbabilityDistribution(b).at(x), 1e-14);
  }
}

TEST(Distribution, CoinResolvedSumsToMarginal) {
  const auto row = Row(3, CoinLabel::kBalanced);
  WalkerState s = WalkerState::Localized(3);
  for (int t = 0; t < 3; ++t) s.Advance(std::span<const CoinLabel>(row));
  const Distribution d = ProbabilityDistribution(s, true);
  ASSERT_TRUE(d.coin_resolved());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_NEAR(d.coin0[i] + d.coin1[i], d.probability[i], 1e-15);
  }
}

// Property: random maps agree with the dense matrix oracle, conserve norm,
// and respect the light cone and parity exactly.
TEST(WalkerProperty, RandomMapsMatchDenseOracle) {
  for (std::uint64_t m = 0; m < 40; ++m) {
    DisorderSpec spec;
    spec.p = 0.1 * static_cast<double>(m % 11);
    spec.steps = 12;
    spec.master_seed = 99;
    const CoinMap map = GenerateCoinMap(spec, m);
    const std::vector<double> expected = oracle::DenseEvolution(map, spec.steps);

    WalkerState s = WalkerState::Localized(map.half_width);
    for (int t = 1; t <= spec.steps; ++t) {
      s.Advance(map.row(t));
      ASSERT_NEAR(s.Norm(), 1.0, 1e-12);
      const Distribution d = ProbabilityDistribution(s);
      for (int x = -map.half_width; x <= map.half_width; ++x) {
        if (std::abs(x) > t || (x + t) % 2 != 0) {
          ASSERT_EQ(d.at(x), 0.0) << "x=" << x << " t=" << t;
        }
      }
    }
    const Distribution d = ProbabilityDistribution(s);
    for (std::size_t i = 0; i < d.size(); ++i) {
      ASSERT_NEAR(d.probability[i], expected[i], 1e-13) << "map " << m;
    }
  }
}

TEST(WalkerProperty, GeneralInitialCoinMatchesOracle) {
  const CoinMap map = GenerateCoinMap({.p = 0.4, .maps = 1, .steps = 9, .recorded_steps = {9}}, 3);
  const Complex c0(0.6, 0.0);
  const Complex c1(0.0, 0.8);
  WalkerState s = WalkerState::Localized(map.half_width, c0, c1);
  for (int t = 1; t <= 9; ++t) s.Advance(map.row(t));
  const auto expected = oracle::DenseEvolution(map, 9, c0, c1);
  const Distribution d = ProbabilityDistribution(s);
  for (std::size_t i = 0; i < d.size(); ++i) EXPECT_NEAR(d.probability[i], expected[i], 1e-13);
}

}  // namespace
}  // namespace qwalk
