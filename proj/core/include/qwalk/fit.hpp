#pragma once

#include <optional>
#include <span>
#include <vector>

#include "qwalk/ensemble.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

// Which lattice sites enter the log-space profile fit, and how the exponent
// search runs.
struct SpatialFitOptions {
  // Sites with P <= min_prob are dropped (ln P undefined or noise floor).
  double min_prob = 1e-6;
  double b_min = 0.5;
  double b_max = 3.5;
  double grid_step = 0.05;
  double b_tolerance = 1e-4;
  // Drop |x| > max_abs_x.
  std::optional<int> max_abs_x;
  // Drop |x| > step - light_cone_margin, the ballistic front of the walk.
  // Needs dist.step.
  int light_cone_margin = 0;
  // Drop x = 0. The model value there is the free constant alone, so the
  // site only pins the intercept to the return-probability peak.
  bool exclude_origin = false;
  // Optional per-site weights indexed like Distribution::probability
  // (e.g. detection counts). Empty means unweighted.
  std::vector<double> weights;
};

// ln P(x) ≈ -delta |x|^b + intercept.
struct SpatialFit {
  double b = 0.0;
  double delta = 0.0;
  double intercept = 0.0;
  // From the full three-parameter Jacobian at the optimum.
  double stderr_b = 0.0;
  // Conditional on b: from the inner linear solve at fixed b.
  double stderr_delta = 0.0;
  double stderr_intercept = 0.0;
  double residual_rms = 0.0;
  int points_used = 0;
};

// Throws DegenerateProfile when all mass sits on one site and
// InsufficientData when fewer than four sites survive the filters.
SpatialFit FitSpatialProfile(const Distribution& dist,
                             const SpatialFitOptions& options = {});

// ln σ² = two_d · ln t + ln c².
struct TemporalFit {
  double two_d = 0.0;
  double c_squared = 0.0;
  double log_c_squared = 0.0;
  double stderr_two_d = 0.0;
  double stderr_log_c_squared = 0.0;
  int points_used = 0;
};

TemporalFit FitVariancePowerLaw(std::span<const VariancePoint> series);

struct MomentEstimate {
  double b = 0.0;
  double phi = 0.0;  // m4 / m2^2 - 3
  bool clamped = false;
};

// b = f^{-1}(excess kurtosis) from central moments.
MomentEstimate EstimateBFromMoments(const Distribution& dist);

}  // namespace qwalk
