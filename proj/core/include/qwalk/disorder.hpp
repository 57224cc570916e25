#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

// How a dynamically disordered cell picks its new coin.
enum class ResampleMode : std::uint8_t {
  kAnyLabel,    // uniform over all three labels; may repeat the static one
  kOtherLabel,  // uniform over the two labels differing from the static one
};

std::string_view ResampleModeName(ResampleMode mode);
std::optional<ResampleMode> ResampleModeFromName(std::string_view name);

// Space-dependent, time-independent coin assignment over x in [-T, T].
struct StaticMap {
  int half_width = 0;
  std::vector<CoinLabel> labels;

  CoinLabel at(int x) const;
  bool operator==(const StaticMap&) const = default;
};

// Full space-time coin assignment: row t (1-based) holds the coins applied
// when taking step t, over every lattice site including unreachable ones.
struct CoinMap {
  int half_width = 0;
  int steps = 0;
  std::vector<CoinLabel> labels;

  double p = 0.0;
  std::uint64_t master_seed = 0;
  std::uint64_t map_index = 0;
  std::optional<StaticMap> static_base;

  std::size_t width() const noexcept {
    return static_cast<std::size_t>(2 * half_width + 1);
  }
  std::span<const CoinLabel> row(int t) const;
  CoinLabel at(int x, int t) const;

  bool operator==(const CoinMap&) const = default;
};

// One disorder level: M coin maps, evolved for `steps`, sampled at
// `recorded_steps`.
struct DisorderSpec {
  double p = 0.0;
  std::size_t maps = 1;
  int steps = 20;
  std::vector<int> recorded_steps{5, 8, 11, 14, 17, 20};
  std::uint64_t master_seed = 0;
  ResampleMode resample = ResampleMode::kAnyLabel;

  // Throws InvalidArgument on any violated invariant.
  void Validate() const;
};

StaticMap GenerateStaticMap(std::uint64_t seed, int half_width);

// Whether cell (x, t) takes a fresh coin under dilution `p`. Exposed so the
// Bernoulli events can be audited independently of label coincidences.
bool CellResampled(std::uint64_t seed, double p, int x, int t);

CoinMap Dilute(const StaticMap& base, double p, std::uint64_t seed, int steps,
               ResampleMode mode = ResampleMode::kAnyLabel);

// Independent per-map stream derived from (master_seed, map_index).
std::uint64_t MapStream(std::uint64_t master_seed, std::uint64_t map_index);

// Seeds GenerateCoinMap hands to GenerateStaticMap and Dilute.
struct MapSeeds {
  std::uint64_t static_seed = 0;
  std::uint64_t dynamic_seed = 0;
};
MapSeeds DeriveMapSeeds(std::uint64_t master_seed, std::uint64_t map_index);

// Static base redrawn per map, then diluted; lattice half-width = steps.
CoinMap GenerateCoinMap(const DisorderSpec& spec, std::uint64_t map_index);

// Homogeneous map with the same coin in every cell.
CoinMap UniformCoinMap(int half_width, int steps, CoinLabel label);

}  // namespace qwalk
