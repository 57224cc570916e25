#include "qwalk/fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"
#include "qwalk/statistics.hpp"
#include "qwalk/theory.hpp"

namespace qwalk {

namespace {

struct Sample {
  double abs_x;
  double log_p;
  double weight;
};

struct InnerSolution {
  double delta = 0.0;
  double intercept = 0.0;
  double rss = 0.0;
  Eigen::Matrix2d normal = Eigen::Matrix2d::Zero();
  bool ok = false;
};

std::vector<Sample> SelectSites(const Distribution& dist,
                                const SpatialFitOptions& options) {
  if (!options.weights.empty() && options.weights.size() != dist.size()) {
    throw InvalidArgument("fit weights must match the distribution grid");
  }
  std::optional<int> radius = options.max_abs_x;
  if (options.light_cone_margin > 0) {
    if (!dist.step) {
      throw InvalidArgument("light-cone margin needs the distribution's step");
    }
    const int cone = *dist.step - options.light_cone_margin;
    radius = radius ? std::min(*radius, cone) : cone;
  }

  std::vector<Sample> samples;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const int x = dist.position(i);
    const double p = dist.probability[i];
    if (dist.step && (x + *dist.step) % 2 != 0) continue;
    if (!(p > options.min_prob)) continue;
    if (radius && std::abs(x) > *radius) continue;
    if (options.exclude_origin && x == 0) continue;
    const double w = options.weights.empty() ? 1.0 : options.weights[i];
    if (!(w > 0.0)) continue;
    samples.push_back({static_cast<double>(std::abs(x)), std::log(p), w});
  }
  return samples;
}

// Weighted linear least squares of log_p on [-|x|^b, 1].
InnerSolution SolveInner(std::span<const Sample> samples, double b) {
  InnerSolution s;
  Eigen::Vector2d rhs = Eigen::Vector2d::Zero();
  for (const Sample& smp : samples) {
    const Eigen::Vector2d row(-std::pow(smp.abs_x, b), 1.0);
    s.normal += smp.weight * row * row.transpose();
    rhs += smp.weight * smp.log_p * row;
  }
  const Eigen::LDLT<Eigen::Matrix2d> ldlt(s.normal);
  if (ldlt.info() != Eigen::Success || std::abs(s.normal.determinant()) <=
                                           1e-12 * s.normal.squaredNorm()) {
    return s;
  }
  const Eigen::Vector2d coef = ldlt.solve(rhs);
  s.delta = coef(0);
  s.intercept = coef(1);
  for (const Sample& smp : samples) {
    const double r =
        smp.log_p - (s.intercept - s.delta * std::pow(smp.abs_x, b));
    s.rss += smp.weight * r * r;
  }
  s.ok = true;
  return s;
}

double Objective(std::span<const Sample> samples, double b) {
  const InnerSolution s = SolveInner(samples, b);
  return s.ok ? s.rss : std::numeric_limits<double>::infinity();
}

double GoldenSection(std::span<const Sample> samples, double lo, double hi,
                     double tolerance) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = Objective(samples, c);
  double fd = Objective(samples, d);
  while (hi - lo > tolerance) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = Objective(samples, c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = Objective(samples, d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

SpatialFit FitSpatialProfile(const Distribution& dist,
                             const SpatialFitOptions& options) {
  if (!(options.b_min > 0.0 && options.b_max > options.b_min)) {
    throw InvalidArgument("b search range must satisfy 0 < b_min < b_max");
  }
  if (!(options.grid_step > 0.0 && options.b_tolerance > 0.0)) {
    throw InvalidArgument("b grid step and tolerance must be positive");
  }
  const auto peak = std::max_element(dist.probability.begin(),
                                     dist.probability.end());
  if (peak == dist.probability.end() || *peak >= 1.0 - 1e-12) {
    throw DegenerateProfile("all probability on a single site");
  }
  const std::vector<Sample> samples = SelectSites(dist, options);
  if (samples.size() < 4) {
    throw InsufficientData("profile fit needs >= 4 usable sites, found " +
                           std::to_string(samples.size()));
  }

  // Coarse pre-scan, then golden section inside the best bracket.
  double best_b = options.b_min;
  double best_rss = std::numeric_limits<double>::infinity();
  const int cells = static_cast<int>(
      std::ceil((options.b_max - options.b_min) / options.grid_step));
  for (int i = 0; i <= cells; ++i) {
    const double b = std::min(options.b_max, options.b_min + i * options.grid_step);
    const double rss = Objective(samples, b);
    if (rss < best_rss) {
      best_rss = rss;
      best_b = b;
    }
  }
  if (!std::isfinite(best_rss)) {
    throw InsufficientData("profile fit needs at least two distinct |x|");
  }
  const double lo = std::max(options.b_min, best_b - options.grid_step);
  const double hi = std::min(options.b_max, best_b + options.grid_step);
  double b = GoldenSection(samples, lo, hi, options.b_tolerance);
  if (Objective(samples, b) > best_rss) b = best_b;

  const InnerSolution inner = SolveInner(samples, b);
  SpatialFit fit;
  fit.b = b;
  fit.delta = inner.delta;
  fit.intercept = inner.intercept;
  fit.points_used = static_cast<int>(samples.size());

  double weight_sum = 0.0;
  for (const Sample& s : samples) weight_sum += s.weight;
  fit.residual_rms = std::sqrt(inner.rss / weight_sum);

  const int dof = fit.points_used - 3;
  if (dof > 0) {
    const double s2 = inner.rss / dof;
    const Eigen::Matrix2d cov = s2 * inner.normal.inverse();
    fit.stderr_delta = std::sqrt(std::max(0.0, cov(0, 0)));
    fit.stderr_intercept = std::sqrt(std::max(0.0, cov(1, 1)));

    Eigen::Matrix3d jtj = Eigen::Matrix3d::Zero();
    for (const Sample& smp : samples) {
      const double xb = std::pow(smp.abs_x, b);
      const double dxb = smp.abs_x > 0.0 ? xb * std::log(smp.abs_x) : 0.0;
      const Eigen::Vector3d g(-fit.delta * dxb, -xb, 1.0);
      jtj += smp.weight * g * g.transpose();
    }
    const Eigen::FullPivLU<Eigen::Matrix3d> lu(jtj);
    if (lu.isInvertible()) {
      fit.stderr_b = std::sqrt(std::max(0.0, s2 * lu.inverse()(0, 0)));
    }
  }
  return fit;
}

TemporalFit FitVariancePowerLaw(std::span<const VariancePoint> series) {
  if (series.size() < 3) {
    throw InsufficientData("power-law fit needs >= 3 points");
  }
  const auto n = static_cast<double>(series.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const VariancePoint& pt : series) {
    if (pt.t < 1) throw InvalidArgument("power-law fit needs t >= 1");
    if (!(pt.variance > 0.0)) {
      throw InvalidArgument("power-law fit needs positive variance at t=" +
                            std::to_string(pt.t));
    }
    mean_x += std::log(pt.t);
    mean_y += std::log(pt.variance);
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const VariancePoint& pt : series) {
    const double dx = std::log(pt.t) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(pt.variance) - mean_y);
  }
  if (!(sxx > 0.0)) {
    throw InsufficientData("power-law fit needs at least two distinct t");
  }
  TemporalFit fit;
  fit.two_d = sxy / sxx;
  fit.log_c_squared = mean_y - fit.two_d * mean_x;
  fit.c_squared = std::exp(fit.log_c_squared);
  fit.points_used = static_cast<int>(series.size());

  double rss = 0.0;
  for (const VariancePoint& pt : series) {
    const double r =
        std::log(pt.variance) - (fit.log_c_squared + fit.two_d * std::log(pt.t));
    rss += r * r;
  }
  const double s2 = rss / (n - 2.0);
  fit.stderr_two_d = std::sqrt(s2 / sxx);
  fit.stderr_log_c_squared = std::sqrt(s2 * (1.0 / n + mean_x * mean_x / sxx));
  return fit;
}

MomentEstimate EstimateBFromMoments(const Distribution& dist) {
  const double m2 = EvenCentralMoment(dist, 1);
  if (!(m2 > 0.0)) {
    throw InvalidArgument("moment estimate needs positive variance");
  }
  const double m4 = EvenCentralMoment(dist, 2);
  MomentEstimate est;
  est.phi = m4 / (m2 * m2) - 3.0;
  const theory::PhiInversion inv = theory::BFromPhiClamped(est.phi);
  est.b = inv.b;
  est.clamped = inv.clamped;
  return est;
}

}  // namespace qwalk
