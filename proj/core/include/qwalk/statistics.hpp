#pragma once

#include <cstdint>
#include <vector>

#include "qwalk/walker.hpp"

namespace qwalk {

// Moments below require |sum P - 1| <= this; otherwise InvalidArgument.
inline constexpr double kNormalizationTolerance = 1e-6;

double Mean(const Distribution& dist);

// Central second moment sum x^2 P - (sum x P)^2.
double Variance(const Distribution& dist);

// sum (x - mean)^(2n) P for n in {1, 2, 3}.
double EvenCentralMoment(const Distribution& dist, int n);

// Bhattacharyya coefficient sum sqrt(P Q); grids must match.
double Similarity(const Distribution& lhs, const Distribution& rhs);

struct CountHistogram {
  int half_width = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total_events = 0;
};

// Multinomial draw of `events` detections: shot-noise emulation.
CountHistogram SampleCounts(const Distribution& dist, std::uint64_t events,
                            std::uint64_t seed);

}  // namespace qwalk
