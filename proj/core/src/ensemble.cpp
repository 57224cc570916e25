#include "qwalk/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "qwalk/errors.hpp"
#include "qwalk/statistics.hpp"

namespace qwalk {

namespace {

// Maps are summed in fixed blocks and blocks are merged in index order, so
// the floating-point result does not depend on the worker count.
constexpr std::size_t kBlockSize = 64;

using Sums = std::vector<std::vector<double>>;

Sums ZeroSums(std::size_t recorded, std::size_t width) {
  return Sums(recorded, std::vector<double>(width, 0.0));
}

void Accumulate(const CoinMap& map, const DisorderSpec& spec, Sums& sums) {
  if (map.half_width < spec.steps || map.steps < spec.steps) {
    throw CapacityError("coin map " + std::to_string(map.map_index) +
                        " smaller than the requested walk");
  }
  // recorded_steps may be unordered; match by value.
  Simulate(map, spec.steps, [&](const WalkerState& state) {
    for (std::size_t r = 0; r < spec.recorded_steps.size(); ++r) {
      if (spec.recorded_steps[r] != state.step()) continue;
      auto& row = sums[r];
      for (std::size_t i = 0; i < row.size(); ++i) {
        const auto& a = state.at(static_cast<int>(i) - map.half_width);
        row[i] += std::norm(a[0]) + std::norm(a[1]);
      }
    }
  });
}

}  // namespace

const Distribution& EnsembleSummary::AtStep(int t) const {
  for (std::size_t r = 0; r < spec.recorded_steps.size(); ++r) {
    if (spec.recorded_steps[r] == t) return averaged[r];
  }
  throw InvalidArgument("step " + std::to_string(t) + " was not recorded");
}

void Simulate(const CoinMap& map, int steps,
              const std::function<void(const WalkerState&)>& observer) {
  if (steps > map.steps) {
    throw InvalidArgument("coin map has only " + std::to_string(map.steps) +
                          " steps");
  }
  WalkerState state = WalkerState::Localized(map.half_width);
  for (int t = 1; t <= steps; ++t) {
    state.Advance(map.row(t));
    if (observer) observer(state);
  }
}

std::vector<Distribution> Evolve(const CoinMap& map,
                                 std::span<const int> recorded_steps) {
  const int last =
      recorded_steps.empty()
          ? 0
          : *std::max_element(recorded_steps.begin(), recorded_steps.end());
  std::vector<Distribution> out(recorded_steps.size());
  Simulate(map, last, [&](const WalkerState& state) {
    for (std::size_t r = 0; r < recorded_steps.size(); ++r) {
      if (recorded_steps[r] == state.step()) {
        out[r] = ProbabilityDistribution(state);
      }
    }
  });
  return out;
}

EnsembleSummary RunEnsemble(const DisorderSpec& spec,
                            const EnsembleOptions& options) {
  return RunEnsemble(
      spec, [&spec](std::uint64_t m) { return GenerateCoinMap(spec, m); },
      options);
}

EnsembleSummary RunEnsemble(const DisorderSpec& spec, const MapSource& source,
                            const EnsembleOptions& options) {
  spec.Validate();
  const auto width = static_cast<std::size_t>(2 * spec.steps + 1);
  const std::size_t recorded = spec.recorded_steps.size();
  const std::size_t blocks = (spec.maps + kBlockSize - 1) / kBlockSize;

  std::vector<Sums> partials(blocks);
  std::atomic<std::size_t> next_block{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      try {
        Sums sums = ZeroSums(recorded, width);
        const std::size_t end = std::min(spec.maps, (b + 1) * kBlockSize);
        for (std::size_t m = b * kBlockSize; m < end; ++m) {
          CoinMap map = source(m);
          if (map.half_width != spec.steps) {
            throw InvalidArgument("coin map half-width " +
                                  std::to_string(map.half_width) +
                                  " differs from steps " +
                                  std::to_string(spec.steps));
          }
          Accumulate(map, spec, sums);
        }
        partials[b] = std::move(sums);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next_block.store(blocks);
        return;
      }
    }
  };

  unsigned threads = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(blocks, 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  Sums total = ZeroSums(recorded, width);
  for (const Sums& part : partials) {
    for (std::size_t r = 0; r < recorded; ++r) {
      for (std::size_t i = 0; i < width; ++i) total[r][i] += part[r][i];
    }
  }

  EnsembleSummary summary;
  summary.spec = spec;
  summary.maps_completed = spec.maps;
  const double inv = 1.0 / static_cast<double>(spec.maps);
  for (std::size_t r = 0; r < recorded; ++r) {
    Distribution d = Distribution::Zeros(spec.steps, spec.recorded_steps[r]);
    for (std::size_t i = 0; i < width; ++i) d.probability[i] = total[r][i] * inv;
    summary.variance_series.push_back({spec.recorded_steps[r], Variance(d)});
    summary.averaged.push_back(std::move(d));
  }
  return summary;
}

}  // namespace qwalk
