#include "qwalk/theory.hpp"

#include <array>
#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::theory {
namespace {

constexpr std::array<double, 5> kExponents{1.0, 1.25, 1.5, 1.75, 2.0};

double SimpsonMoment(int order, double b, double sigma) {
  return oracle::MomentBySimpson(order, b, sigma);
}

TEST(FOfB, ClosedFormPoints) {
  EXPECT_NEAR(FOfB(1.0), 3.0, 1e-12);
  EXPECT_NEAR(FOfB(2.0), 0.0, 1e-12);
  // Direct Gamma evaluation: Γ(10/3) Γ(2/3) / Γ(2)^2 - 3.
  EXPECT_NEAR(FOfB(1.5), oracle::ExcessKurtosisDirect(1.5), 1e-12);
  EXPECT_NEAR(FOfB(1.5), 0.7619, 1e-4);
}

TEST(FOfB, AgreesWithDirectGamma) {
  for (double b = 0.6; b <= 3.5; b += 0.1) {
    EXPECT_NEAR(FOfB(b), oracle::ExcessKurtosisDirect(b),
                1e-10 * std::max(1.0, std::abs(FOfB(b))));
  }
}

TEST(FOfB, StrictlyDecreasingOnUnitInterval) {
  double previous = FOfB(1.0);
  for (int i = 1; i < 100; ++i) {
    const double current = FOfB(1.0 + i / 99.0);
    EXPECT_LT(current, previous);
    previous = current;
  }
}

TEST(FOfB, DomainChecked) {
  EXPECT_THROW(FOfB(0.4), InvalidArgument);
  EXPECT_THROW(FOfB(3.6), InvalidArgument);
}

TEST(BFromPhi, Endpoints) {
  EXPECT_DOUBLE_EQ(BFromPhi(0.0), 2.0);
  EXPECT_DOUBLE_EQ(BFromPhi(3.0), 1.0);
}

TEST(BFromPhi, RoundTrip) {
  for (int i = 0; i < 50; ++i) {
    const double b = 1.0 + i / 49.0;
    EXPECT_NEAR(BFromPhi(FOfB(b)), b, 1e-9);
    EXPECT_LT(std::abs(FOfB(BFromPhi(FOfB(b))) - FOfB(b)), 1e-10);
  }
}

TEST(BFromPhi, OutOfRange) {
  EXPECT_THROW(BFromPhi(-0.1), RangeError);
  EXPECT_THROW(BFromPhi(3.2), RangeError);
  EXPECT_TRUE(BFromPhiClamped(4.0).clamped);
  EXPECT_EQ(BFromPhiClamped(4.0).b, 1.0);
  EXPECT_EQ(BFromPhiClamped(-1.0).b, 2.0);
  EXPECT_FALSE(BFromPhiClamped(1.0).clamped);
}

TEST(StretchedExpPdf, GaussianReduction) {
  const TheoryProfile g = TheoryProfile::Make(2.0, 1.7);
  EXPECT_NEAR(g.a, 1.0 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(StretchedExpPdf(0.0, g), 1.0 / (1.7 * std::sqrt(2 * std::numbers::pi)), 1e-15);
  EXPECT_NEAR(StretchedExpPdf(0.9, g),
              std::exp(-0.9 * 0.9 / (2 * 1.7 * 1.7)) / (1.7 * std::sqrt(2 * std::numbers::pi)),
              1e-15);
}

TEST(StretchedExpPdf, MatchesDirectFormula) {
  for (double b : kExponents) {
    const TheoryProfile p = TheoryProfile::Make(b, 2.5);
    for (double x : {-7.0, -1.0, 0.0, 0.3, 4.0}) {
      EXPECT_NEAR(StretchedExpPdf(x, p), oracle::PdfDirect(x, b, 2.5), 1e-14);
    }
  }
}

TEST(TheoryProfile, Invariants) {
  const TheoryProfile p = TheoryProfile::Make(1.3, 2.0);
  EXPECT_NEAR(p.a, ScaleFactor(1.3), 1e-12);
  EXPECT_THROW(TheoryProfile::Make(1.3, 0.0), InvalidArgument);
  EXPECT_THROW(TheoryProfile::Make(4.0, 1.0), InvalidArgument);
}

TEST(Moments, FormulaVersusIndependentQuadrature) {
  for (double b : kExponents) {
    const double sigma = 1.3;
    const TheoryProfile p = TheoryProfile::Make(b, sigma);
    EXPECT_NEAR(SimpsonMoment(0, b, sigma), 1.0, 1e-8) << "b=" << b;
    for (int n = 1; n <= 2; ++n) {
      const double closed = EvenMomentFormula(n, p);
      EXPECT_NEAR(SimpsonMoment(2 * n, b, sigma) / closed, 1.0, 1e-6) << "b=" << b << " n=" << n;
      EXPECT_NEAR(QuadratureMoment(2 * n, p) / closed, 1.0, 1e-6) << "b=" << b << " n=" << n;
    }
    EXPECT_NEAR(QuadratureMoment(0, p), 1.0, 1e-8);
  }
}

TEST(Moments, HeavyTailHighOrder) {
  const TheoryProfile p = TheoryProfile::Make(0.75, 2.0);
  EXPECT_NEAR(QuadratureMoment(6, p) / EvenMomentFormula(3, p), 1.0, 1e-9);
  EXPECT_GT(IntegrationRadius(p, 6), IntegrationRadius(p, 0));
}

TEST(Moments, NamedCases) {
  const TheoryProfile p = TheoryProfile::Make(1.7, 3.0);
  EXPECT_NEAR(EvenMomentFormula(1, p), 9.0, 1e-12);
  const TheoryProfile g = TheoryProfile::Make(2.0, 3.0);
  EXPECT_NEAR(EvenMomentFormula(2, g), 3.0 * 81.0, 1e-10);
  EXPECT_EQ(QuadratureMoment(3, g), 0.0);
  EXPECT_THROW(EvenMomentFormula(0, g), InvalidArgument);
}

TEST(CharacteristicExpansion, ZeroWavenumber) {
  const CharacteristicCheck c = CharacteristicExpansionCheck(TheoryProfile::Make(1.5, 2.0), 0.0);
  EXPECT_EQ(c.quadrature, 1.0);
  EXPECT_EQ(c.residual, 0.0);
}

TEST(CharacteristicExpansion, GaussianClosedForm) {
  const TheoryProfile g = TheoryProfile::Make(2.0, 2.0);
  for (double k : {0.02, 0.1, 0.2}) {
    const CharacteristicCheck c = CharacteristicExpansionCheck(g, k);
    const double s2k2 = 4.0 * k * k;
    EXPECT_NEAR(c.quadrature, std::exp(-s2k2 / 2), 1e-12);
    // Next series term: -(σk)^6 / 48.
    EXPECT_NEAR(c.residual, -std::pow(s2k2, 3) / 48.0, 5e-2 * std::pow(s2k2, 3) / 48.0 + 1e-13);
  }
}

TEST(CharacteristicExpansion, ResidualIsSixthOrder) {
  for (double b : {1.0, 1.5, 2.0}) {
    const double sigma = 2.0;
    const TheoryProfile p = TheoryProfile::Make(b, sigma);
    const CharacteristicCheck c = CharacteristicExpansionCheck(p, 0.1 / sigma);
    EXPECT_LT(std::abs(c.residual), 1e-4 * std::abs(c.quadrature)) << "b=" << b;
    // Halving k shrinks the residual by ~2^6.
    const CharacteristicCheck half = CharacteristicExpansionCheck(p, 0.05 / sigma);
    EXPECT_NEAR(c.residual / half.residual, 64.0, 8.0) << "b=" << b;
  }
  EXPECT_THROW(CharacteristicExpansionCheck(TheoryProfile::Make(1.5, 2.0), 0.3), RangeError);
}

TEST(GeneratorMoments, Relations) {
  EXPECT_NEAR(ComputeGeneratorMoments(2.0, 1.3).lambda4_integral, 0.0, 1e-12);
  EXPECT_NEAR(ComputeGeneratorMoments(1.0, 2.0).lambda4_integral, -48.0, 1e-10);
  const GeneratorMoments g = ComputeGeneratorMoments(1.5, std::sqrt(2.0));
  EXPECT_NEAR(g.lambda2_integral, 2.0, 1e-12);
  EXPECT_NEAR(g.lambda4_integral, -4.0 * oracle::ExcessKurtosisDirect(1.5), 1e-10);
  EXPECT_NEAR(g.lambda4_integral, -3.048, 1e-3);
  EXPECT_EQ(g.lambda0, 0.0);
  EXPECT_NEAR(g.lambda4_integral, -g.phi * g.lambda2_integral * g.lambda2_integral, 1e-12);
  EXPECT_THROW(ComputeGeneratorMoments(1.5, 0.0), InvalidArgument);
}

}  // namespace
}  // namespace qwalk::theory
