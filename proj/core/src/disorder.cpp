#include "qwalk/disorder.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/rng.hpp"

namespace qwalk {

namespace {

// Domain-separation tags for the sub-streams of one map.
constexpr std::uint64_t kStaticTag = 0x5354415449430000ULL;
constexpr std::uint64_t kDynamicTag = 0x44594e414d494300ULL;
constexpr std::uint64_t kBernoulliDraw = 0;
constexpr std::uint64_t kLabelDraw = 1;

CoinLabel LabelFromIndex(std::uint64_t i) { return static_cast<CoinLabel>(i); }

void RequireProbability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("p must lie in [0, 1], got " + std::to_string(p));
  }
}

}  // namespace

std::string_view ResampleModeName(ResampleMode mode) {
  return mode == ResampleMode::kAnyLabel ? "any" : "other";
}

std::optional<ResampleMode> ResampleModeFromName(std::string_view name) {
  if (name == "any") return ResampleMode::kAnyLabel;
  if (name == "other") return ResampleMode::kOtherLabel;
  return std::nullopt;
}

CoinLabel StaticMap::at(int x) const {
  if (std::abs(x) > half_width) throw InvalidArgument("position outside map");
  return labels[static_cast<std::size_t>(x + half_width)];
}

std::span<const CoinLabel> CoinMap::row(int t) const {
  if (t < 1 || t > steps) {
    throw InvalidArgument("step " + std::to_string(t) + " outside coin map");
  }
  return std::span<const CoinLabel>(labels).subspan(
      static_cast<std::size_t>(t - 1) * width(), width());
}

CoinLabel CoinMap::at(int x, int t) const {
  if (std::abs(x) > half_width) throw InvalidArgument("position outside map");
  return row(t)[static_cast<std::size_t>(x + half_width)];
}

void DisorderSpec::Validate() const {
  RequireProbability(p);
  if (maps < 1) throw InvalidArgument("number of maps must be >= 1");
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  if (recorded_steps.empty()) {
    throw InvalidArgument("recorded_steps must not be empty");
  }
  for (int t : recorded_steps) {
    if (t < 1 || t > steps) {
      throw InvalidArgument("recorded step " + std::to_string(t) +
                            " outside [1, " + std::to_string(steps) + "]");
    }
  }
}

StaticMap GenerateStaticMap(std::uint64_t seed, int half_width) {
  if (half_width < 1) throw InvalidArgument("half_width must be >= 1");
  StaticMap map{half_width, {}};
  map.labels.reserve(static_cast<std::size_t>(2 * half_width + 1));
  for (int x = -half_width; x <= half_width; ++x) {
    const std::uint64_t h = rng::Hash(seed, {rng::Counter(x)});
    map.labels.push_back(LabelFromIndex(rng::ToBelow(h, kCoinLabelCount)));
  }
  return map;
}

bool CellResampled(std::uint64_t seed, double p, int x, int t) {
  const std::uint64_t h =
      rng::Hash(seed, {rng::Counter(x), rng::Counter(t), kBernoulliDraw});
  return rng::ToUnit(h) < p;
}

CoinMap Dilute(const StaticMap& base, double p, std::uint64_t seed, int steps,
               ResampleMode mode) {
  RequireProbability(p);
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  CoinMap map;
  map.half_width = base.half_width;
  map.steps = steps;
  map.p = p;
  map.static_base = base;
  map.labels.reserve(static_cast<std::size_t>(steps) * map.width());
  for (int t = 1; t <= steps; ++t) {
    for (int x = -base.half_width; x <= base.half_width; ++x) {
      const CoinLabel fixed = base.at(x);
      if (!CellResampled(seed, p, x, t)) {
        map.labels.push_back(fixed);
        continue;
      }
      const std::uint64_t h =
          rng::Hash(seed, {rng::Counter(x), rng::Counter(t), kLabelDraw});
      if (mode == ResampleMode::kAnyLabel) {
        map.labels.push_back(LabelFromIndex(rng::ToBelow(h, kCoinLabelCount)));
      } else {
        const auto offset = 1 + rng::ToBelow(h, kCoinLabelCount - 1);
        map.labels.push_back(LabelFromIndex(
            (static_cast<std::uint64_t>(fixed) + offset) % kCoinLabelCount));
      }
    }
  }
  return map;
}

std::uint64_t MapStream(std::uint64_t master_seed, std::uint64_t map_index) {
  return rng::Hash(master_seed, {map_index});
}

MapSeeds DeriveMapSeeds(std::uint64_t master_seed, std::uint64_t map_index) {
  const std::uint64_t stream = MapStream(master_seed, map_index);
  return {rng::Combine(stream, kStaticTag), rng::Combine(stream, kDynamicTag)};
}

CoinMap GenerateCoinMap(const DisorderSpec& spec, std::uint64_t map_index) {
  const MapSeeds seeds = DeriveMapSeeds(spec.master_seed, map_index);
  const StaticMap base = GenerateStaticMap(seeds.static_seed, spec.steps);
  CoinMap map =
      Dilute(base, spec.p, seeds.dynamic_seed, spec.steps, spec.resample);
  map.master_seed = spec.master_seed;
  map.map_index = map_index;
  return map;
}

CoinMap UniformCoinMap(int half_width, int steps, CoinLabel label) {
  if (half_width < 1) throw InvalidArgument("half_width must be >= 1");
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  CoinMap map;
  map.half_width = half_width;
  map.steps = steps;
  map.labels.assign(static_cast<std::size_t>(steps) *
                        static_cast<std::size_t>(2 * half_width + 1),
                    label);
  return map;
}

}  // namespace qwalk
