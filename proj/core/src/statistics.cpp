#include "qwalk/statistics.hpp"

#include <cmath>
#include <random>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void RequireNormalized(const Distribution& dist) {
  const double total = dist.Total();
  if (!(std::abs(total - 1.0) <= kNormalizationTolerance)) {
    throw InvalidArgument("distribution not normalized (sum = " +
                          std::to_string(total) + ")");
  }
}

double CentralMoment(const Distribution& dist, int order) {
  const double mean = Mean(dist);
  double m = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    m += std::pow(dist.position(i) - mean, order) * dist.probability[i];
  }
  return m;
}

}  // namespace

double Mean(const Distribution& dist) {
  RequireNormalized(dist);
  double m = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    m += dist.position(i) * dist.probability[i];
  }
  return m;
}

double Variance(const Distribution& dist) {
  // Two-pass central form; clamp the rounding residue of a point mass.
  return std::max(0.0, CentralMoment(dist, 2));
}

double EvenCentralMoment(const Distribution& dist, int n) {
  if (n < 1 || n > 3) throw InvalidArgument("moment order 2n needs n in {1,2,3}");
  return std::max(0.0, CentralMoment(dist, 2 * n));
}

double Similarity(const Distribution& lhs, const Distribution& rhs) {
  if (lhs.half_width != rhs.half_width || lhs.size() != rhs.size()) {
    throw InvalidArgument("similarity needs distributions on the same grid");
  }
  RequireNormalized(lhs);
  RequireNormalized(rhs);
  double s = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    s += std::sqrt(lhs.probability[i] * rhs.probability[i]);
  }
  return std::min(1.0, s);
}

CountHistogram SampleCounts(const Distribution& dist, std::uint64_t events,
                            std::uint64_t seed) {
  CountHistogram hist{dist.half_width,
                      std::vector<std::uint64_t>(dist.size(), 0), events};
  if (events == 0) return hist;
  RequireNormalized(dist);

  // Sequential conditional binomials.
  std::mt19937_64 engine(seed);
  std::uint64_t remaining = events;
  double mass_left = dist.Total();
  for (std::size_t i = 0; i < dist.size() && remaining > 0; ++i) {
    const double pi = dist.probability[i];
    if (pi <= 0.0) continue;
    const double q = mass_left > 0.0 ? std::min(1.0, pi / mass_left) : 1.0;
    std::binomial_distribution<std::uint64_t> draw(remaining, q);
    const std::uint64_t k = q >= 1.0 ? remaining : draw(engine);
    hist.counts[i] = k;
    remaining -= k;
    mass_left -= pi;
  }
  if (remaining > 0) {
    // Rounding left mass on the table; hand it to the last populated bin.
    for (std::size_t i = dist.size(); i-- > 0;) {
      if (dist.probability[i] > 0.0) {
        hist.counts[i] += remaining;
        break;
      }
    }
  }
  return hist;
}

}  // namespace qwalk
