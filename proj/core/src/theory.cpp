#include "qwalk/theory.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "qwalk/errors.hpp"

namespace qwalk::theory {

namespace {

constexpr double kPhiTolerance = 1e-10;
constexpr double kQuadratureTolerance = 1e-13;
constexpr unsigned kQuadratureDepth = 18;
constexpr double kTailMass = 1e-16;

void RequireExponent(double b) {
  if (!(b >= kMinExponent && b <= kMaxExponent)) {
    throw InvalidArgument("exponent b=" + std::to_string(b) +
                          " outside [0.5, 3.5]");
  }
}

// Even integrand: integrate [0, R] and double. The cusp of |x|^b sits on the
// endpoint where Gauss-Kronrod has no node.
template <typename F>
double IntegrateSymmetric(F&& f, double radius) {
  using boost::math::quadrature::gauss_kronrod;
  return 2.0 * gauss_kronrod<double, 61>::integrate(
                   f, 0.0, radius, kQuadratureDepth, kQuadratureTolerance);
}

}  // namespace

double FOfB(double b) {
  RequireExponent(b);
  const double log_ratio = std::lgamma(5.0 / b) + std::lgamma(1.0 / b) -
                           2.0 * std::lgamma(3.0 / b);
  return std::exp(log_ratio) - 3.0;
}

double BFromPhi(double phi) {
  const double hi_phi = FOfB(kInverseLowerB);
  const double lo_phi = FOfB(kInverseUpperB);
  if (!(phi >= lo_phi - kPhiTolerance && phi <= hi_phi + kPhiTolerance)) {
    throw RangeError("phi=" + std::to_string(phi) + " outside [f(2), f(1)]");
  }
  // f decreases: f(lo) >= phi >= f(hi).
  double lo = kInverseLowerB;
  double hi = kInverseUpperB;
  if (std::abs(hi_phi - phi) < kPhiTolerance) return lo;
  if (std::abs(lo_phi - phi) < kPhiTolerance) return hi;
  while (hi - lo > 1e-15) {
    const double mid = 0.5 * (lo + hi);
    if (FOfB(mid) > phi) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PhiInversion BFromPhiClamped(double phi) {
  const double hi_phi = FOfB(kInverseLowerB);
  const double lo_phi = FOfB(kInverseUpperB);
  if (phi > hi_phi) return {kInverseLowerB, true};
  if (phi < lo_phi) return {kInverseUpperB, true};
  return {BFromPhi(phi), false};
}

double ScaleFactor(double b) {
  RequireExponent(b);
  return std::exp(0.5 * (std::lgamma(3.0 / b) - std::lgamma(1.0 / b)));
}

TheoryProfile TheoryProfile::Make(double b, double sigma) {
  RequireExponent(b);
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("sigma must be positive and finite");
  }
  return {b, sigma, ScaleFactor(b)};
}

double StretchedExpPdf(double x, const TheoryProfile& profile) {
  const double b = profile.b;
  const double norm = profile.a * b /
                      (2.0 * profile.sigma * std::exp(std::lgamma(1.0 / b)));
  return norm * std::exp(-std::pow(std::abs(profile.a * x / profile.sigma), b));
}

double EvenMomentFormula(int n, const TheoryProfile& profile) {
  if (n < 1) throw InvalidArgument("moment index n must be >= 1");
  const double b = profile.b;
  const double log_ratio =
      std::lgamma((2.0 * n + 1.0) / b) - std::lgamma(1.0 / b);
  return std::exp(log_ratio) * std::pow(profile.sigma / profile.a, 2 * n);
}

double IntegrationRadius(const TheoryProfile& profile, int order) {
  // The share of ∫ |x|^order pdf beyond R is Q((order+1)/b, (aR/σ)^b).
  const double u = boost::math::gamma_q_inv((order + 1) / profile.b, kTailMass);
  return profile.sigma / profile.a * std::pow(u, 1.0 / profile.b);
}

double QuadratureMoment(int order, const TheoryProfile& profile) {
  if (order < 0) throw InvalidArgument("moment order must be >= 0");
  if (order % 2 == 1) return 0.0;
  return IntegrateSymmetric(
      [&](double x) { return std::pow(x, order) * StretchedExpPdf(x, profile); },
      IntegrationRadius(profile, order));
}

CharacteristicCheck CharacteristicExpansionCheck(const TheoryProfile& profile,
                                                 double k) {
  if (!std::isfinite(k) || std::abs(k) * profile.sigma > 0.5) {
    throw RangeError("|k|·sigma must be <= 0.5");
  }
  CharacteristicCheck check;
  check.k = k;
  if (k == 0.0) return check;
  check.quadrature = IntegrateSymmetric(
      [&](double x) { return std::cos(k * x) * StretchedExpPdf(x, profile); },
      IntegrationRadius(profile));
  const double s2k2 = profile.sigma * profile.sigma * k * k;
  const double kurtosis = FOfB(profile.b) + 3.0;
  check.series = 1.0 - s2k2 / 2.0 + kurtosis * s2k2 * s2k2 / 24.0;
  check.residual = check.quadrature - check.series;
  return check;
}

GeneratorMoments ComputeGeneratorMoments(double b, double sigma_of_t) {
  if (!(sigma_of_t > 0.0)) throw InvalidArgument("sigma(t) must be positive");
  const double phi = FOfB(b);
  const double s2 = sigma_of_t * sigma_of_t;
  return {0.0, s2, -phi * s2 * s2, phi};
}

}  // namespace qwalk::theory
