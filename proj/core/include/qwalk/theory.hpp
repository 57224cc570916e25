#pragma once

namespace qwalk::theory {

// Domain of the exponent for f and the profile family.
inline constexpr double kMinExponent = 0.5;
inline constexpr double kMaxExponent = 3.5;

// Φ-range over which f is inverted: [f(2), f(1)] = [0, 3].
inline constexpr double kInverseLowerB = 1.0;
inline constexpr double kInverseUpperB = 2.0;

// Excess kurtosis of the stretched exponential with exponent b:
//   f(b) = Γ(5/b) Γ(1/b) / Γ(3/b)^2 - 3,
// evaluated through log-Gamma. Strictly decreasing on [1, 2].
double FOfB(double b);

// Inverse of f on [1, 2] by bisection to |f(b) - phi| < 1e-10.
// RangeError if phi is outside [f(2), f(1)].
double BFromPhi(double phi);

struct PhiInversion {
  double b = 0.0;
  bool clamped = false;
};

// As BFromPhi, but phi outside [0, 3] is clamped to the nearest endpoint and
// flagged.
PhiInversion BFromPhiClamped(double phi);

// a = sqrt(Γ(3/b) / Γ(1/b)), which makes sigma the standard deviation.
double ScaleFactor(double b);

struct TheoryProfile {
  double b = 2.0;
  double sigma = 1.0;
  double a = ScaleFactor(2.0);

  // Validates b in [0.5, 3.5] and sigma > 0.
  static TheoryProfile Make(double b, double sigma);
};

// ab / (2 σ Γ(1/b)) · exp(-|a x / σ|^b).
double StretchedExpPdf(double x, const TheoryProfile& profile);

// E(x^{2n}) = Γ((2n+1)/b) / Γ(1/b) · (σ/a)^{2n}.
double EvenMomentFormula(int n, const TheoryProfile& profile);

// Truncation radius for ∫ |x|^order pdf: the dropped tail carries a 1e-16
// share of the integral.
double IntegrationRadius(const TheoryProfile& profile, int order = 0);

// ∫ x^order pdf(x) dx by adaptive Gauss-Kronrod on the truncated support.
double QuadratureMoment(int order, const TheoryProfile& profile);

struct CharacteristicCheck {
  double k = 0.0;
  double quadrature = 1.0;  // Φ(k) = ∫ e^{-ikx} pdf(x) dx (real by symmetry)
  double series = 1.0;      // 1 - σ²k²/2 + (f(b)+3) σ⁴k⁴/24
  double residual = 0.0;    // quadrature - series, O((kσ)^6)
};

// Requires |k|σ <= 0.5, else RangeError.
CharacteristicCheck CharacteristicExpansionCheck(const TheoryProfile& profile,
                                                 double k);

// Integrated generator coefficients fixed by matching the Taylor series of
// the Green's function to the characteristic function at time t:
//   λ0 = 0,  ∫λ2 dt' = σ(t)²,  ∫λ4 dt' = -f(b) σ(t)⁴.
struct GeneratorMoments {
  double lambda0 = 0.0;
  double lambda2_integral = 0.0;
  double lambda4_integral = 0.0;
  double phi = 0.0;
};

GeneratorMoments ComputeGeneratorMoments(double b, double sigma_of_t);

}  // namespace qwalk::theory
