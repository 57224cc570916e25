#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

void RequireFinite(double angle, const char* name) {
  if (!std::isfinite(angle)) {
    throw InvalidArgument(std::string(name) + " must be finite");
  }
}

}  // namespace

Matrix2 Multiply(const Matrix2& lhs, const Matrix2& rhs) {
  return {lhs[0] * rhs[0] + lhs[1] * rhs[2], lhs[0] * rhs[1] + lhs[1] * rhs[3],
          lhs[2] * rhs[0] + lhs[3] * rhs[2], lhs[2] * rhs[1] + lhs[3] * rhs[3]};
}

Matrix2 ConjugateTranspose(const Matrix2& m) {
  return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

double PhaseInsensitiveDistance(const Matrix2& lhs, const Matrix2& rhs) {
  // The phase maximizing Re(e^{i a} <rhs, lhs>) is arg of the inner product.
  Complex overlap{};
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(rhs[i]) * lhs[i];
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0, 0.0};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(lhs[i] - phase * rhs[i]));
  }
  return worst;
}

CoinOperator MakeCoin(double theta) {
  RequireFinite(theta, "theta");
  const double c = std::cos(theta);
  const Complex s = -kI * std::sin(theta);
  return {theta, {Complex{c, 0.0}, s, s, Complex{c, 0.0}}};
}

Matrix2 QuarterWavePlate() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {Complex{r, 0.0}, Complex{0.0, -r}, Complex{0.0, -r}, Complex{r, 0.0}};
}

Matrix2 ElectroOpticModulator(double phi) {
  RequireFinite(phi, "phi");
  const double c = std::cos(phi);
  const Complex s = -kI * std::sin(phi);
  return {Complex{c, 0.0}, s, s, Complex{c, 0.0}};
}

CoinOperator ComposeEomQwp(double phi) {
  return {phi + std::numbers::pi / 4.0,
          Multiply(ElectroOpticModulator(phi), QuarterWavePlate())};
}

double CoinAngle(CoinLabel label) {
  switch (label) {
    case CoinLabel::kIdentity:
      return 0.0;
    case CoinLabel::kBalanced:
      return std::numbers::pi / 4.0;
    case CoinLabel::kReflection:
      return std::numbers::pi / 2.0;
  }
  throw InvalidArgument("unknown coin label");
}

const CoinOperator& CoinFor(CoinLabel label) {
  // cos(pi/2) is not exactly zero in floating point; pin the table so the
  // reflection coin never leaks amplitude.
  static const std::array<CoinOperator, kCoinLabelCount> table = [] {
    std::array<CoinOperator, kCoinLabelCount> t{
        MakeCoin(0.0), MakeCoin(std::numbers::pi / 4.0),
        MakeCoin(std::numbers::pi / 2.0)};
    t[2].entries[0] = t[2].entries[3] = Complex{0.0, 0.0};
    t[2].entries[1] = t[2].entries[2] = Complex{0.0, -1.0};
    return t;
  }();
  return table[static_cast<std::size_t>(label)];
}

char CoinLabelCode(CoinLabel label) {
  static constexpr std::array<char, kCoinLabelCount> codes{'I', 'B', 'R'};
  return codes[static_cast<std::size_t>(label)];
}

std::optional<CoinLabel> CoinLabelFromCode(char code) {
  switch (code) {
    case 'I':
      return CoinLabel::kIdentity;
    case 'B':
      return CoinLabel::kBalanced;
    case 'R':
      return CoinLabel::kReflection;
    default:
      return std::nullopt;
  }
}

}  // namespace qwalk
