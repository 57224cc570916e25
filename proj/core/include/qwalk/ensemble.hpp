#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qwalk/disorder.hpp"
#include "qwalk/walker.hpp"

namespace qwalk {

struct VariancePoint {
  int t = 0;
  double variance = 0.0;
};

struct EnsembleSummary {
  DisorderSpec spec;
  // Pointwise mean over maps, aligned with spec.recorded_steps.
  std::vector<Distribution> averaged;
  // Variance of each averaged distribution (not the mean of per-map
  // variances).
  std::vector<VariancePoint> variance_series;
  std::size_t maps_completed = 0;

  const Distribution& AtStep(int t) const;
};

struct EnsembleOptions {
  // 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

using MapSource = std::function<CoinMap(std::uint64_t map_index)>;

// Evolves |x=0, coin 0> under `map` for `steps` steps; `observer` sees the
// state after every step.
void Simulate(const CoinMap& map, int steps,
              const std::function<void(const WalkerState&)>& observer);

// Distributions of a single realization at the requested steps.
std::vector<Distribution> Evolve(const CoinMap& map,
                                 std::span<const int> recorded_steps);

// Ensemble over GenerateCoinMap(spec, m) for m in [0, spec.maps).
EnsembleSummary RunEnsemble(const DisorderSpec& spec,
                            const EnsembleOptions& options = {});

// Same, with maps supplied by the caller (forced or replayed maps).
EnsembleSummary RunEnsemble(const DisorderSpec& spec, const MapSource& source,
                            const EnsembleOptions& options = {});

}  // namespace qwalk
