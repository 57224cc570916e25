#pragma once

// Independent reference computations used only by tests. Nothing here calls
// into the production code paths it is compared against.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/disorder.hpp"

namespace qwalk::oracle {

// Full-lattice evolution with explicit dense (2L x 2L) shift and coin
// matrices; basis index 2*(x+T) + coin. Returns P(x) after `steps`.
inline std::vector<double> DenseEvolution(const CoinMap& map, int steps,
                                          std::complex<double> c0 = {1.0, 0.0},
                                          std::complex<double> c1 = {0.0, 0.0}) {
  using Mat = Eigen::MatrixXcd;
  const int T = map.half_width;
  const int L = 2 * T + 1;
  const std::complex<double> I(0.0, 1.0);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(2 * L);
  psi(2 * T) = c0;
  psi(2 * T + 1) = c1;

  Mat shift = Mat::Zero(2 * L, 2 * L);
  for (int j = 0; j < L; ++j) {
    if (j - 1 >= 0) shift(2 * (j - 1), 2 * j) = 1.0;
    if (j + 1 < L) shift(2 * (j + 1) + 1, 2 * j + 1) = 1.0;
  }
  for (int t = 1; t <= steps; ++t) {
    Mat coin = Mat::Zero(2 * L, 2 * L);
    for (int j = 0; j < L; ++j) {
      const double theta = CoinAngle(map.at(j - T, t));
      // Exact zeros for the reflection coin, like a lab half-wave setting.
      const double c = std::abs(theta - M_PI / 2) < 1e-15 ? 0.0 : std::cos(theta);
      const double s = std::sin(theta);
      coin(2 * j, 2 * j) = c;
      coin(2 * j, 2 * j + 1) = -I * s;
      coin(2 * j + 1, 2 * j) = -I * s;
      coin(2 * j + 1, 2 * j + 1) = c;
    }
    psi = shift * (coin * psi);
  }
  std::vector<double> prob(static_cast<std::size_t>(L));
  for (int j = 0; j < L; ++j) {
    prob[static_cast<std::size_t>(j)] = std::norm(psi(2 * j)) + std::norm(psi(2 * j + 1));
  }
  return prob;
}

// Composite Simpson rule with n (even) panels.
inline double Simpson(const std::function<double(double)>& f, double a, double b,
                      int n = 200000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

// Direct Gamma-function evaluation of the excess kurtosis (no log-Gamma).
inline double ExcessKurtosisDirect(double b) {
  return std::tgamma(5.0 / b) * std::tgamma(1.0 / b) /
             std::pow(std::tgamma(3.0 / b), 2) -
         3.0;
}

// Stretched-exponential pdf written from scratch with tgamma.
inline double PdfDirect(double x, double b, double sigma) {
  const double a = std::sqrt(std::tgamma(3.0 / b) / std::tgamma(1.0 / b));
  return a * b / (2.0 * sigma * std::tgamma(1.0 / b)) *
         std::exp(-std::pow(std::abs(a * x / sigma), b));
}

// ∫ x^order pdf by Simpson on a generous symmetric support.
inline double MomentBySimpson(int order, double b, double sigma) {
  const double radius = 40.0 * sigma * std::max(1.0, std::pow(2.0 / b, 2));
  return 2.0 * Simpson(
                   [&](double x) { return std::pow(x, order) * PdfDirect(x, b, sigma); },
                   0.0, radius, 400000);
}

}  // namespace qwalk::oracle
