#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/disorder.hpp"
#include "qwalk/fit.hpp"

namespace qwalk {

enum class RunMode : std::uint8_t {
  kExperimental,  // 400 coin maps per disorder level
  kNumerical,     // 10 000 coin maps per disorder level
};

std::size_t PresetMaps(RunMode mode);
std::string_view RunModeName(RunMode mode);

struct FitSettings {
  double min_prob = 1e-6;
  double b_min = 0.5;
  double b_max = 3.5;
  // Spatial fits skip the outermost shells of the light cone and the origin.
  int light_cone_margin = 8;
  bool exclude_origin = true;
  // Step whose averaged profile is fitted; 0 means the last step.
  int spatial_step = 0;

  SpatialFitOptions ToOptions() const;
};

struct RunConfig {
  std::vector<double> p_values{0.0, 0.1, 0.2, 0.3, 0.5, 1.0};
  int steps = 20;
  std::vector<int> recorded_steps{5, 8, 11, 14, 17, 20};
  RunMode mode = RunMode::kNumerical;
  std::size_t maps = PresetMaps(RunMode::kNumerical);
  std::uint64_t master_seed = 2020;
  ResampleMode resample = ResampleMode::kAnyLabel;
  std::string output_dir = "qwalk-out";
  // Worker threads; 0 = hardware concurrency. Never affects results.
  unsigned threads = 0;
  FitSettings fit;

  int SpatialStep() const { return fit.spatial_step > 0 ? fit.spatial_step : steps; }
  DisorderSpec Disorder(double p) const;

  // Every field that influences results; output_dir and threads are left out.
  nlohmann::json ToJson() const;
  // FNV-1a 64 of ToJson().dump(), as 16 hex digits.
  std::string Hash() const;
};

// Applies `file` (a JSON object, may be null) then `flags` (same keys) on top
// of the defaults. Within a layer `mode` sets the map count unless the same
// layer also sets `maps`. Unknown keys and invalid values raise ConfigError
// naming the key.
RunConfig ResolveConfig(const nlohmann::json& file, const nlohmann::json& flags);
RunConfig ResolveConfig(std::initializer_list<nlohmann::json> layers);

// Parses JSON text for ResolveConfig; empty text means an empty object.
nlohmann::json ParseConfigText(std::string_view text);

}  // namespace qwalk
