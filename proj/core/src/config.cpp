#include "qwalk/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>

#include <fmt/format.h>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

std::uint64_t Fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double GetNumber(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

long long GetInteger(const json& v, const std::string& key, long long lo) {
  if (!v.is_number_integer()) throw ConfigError(key, "expected an integer");
  const long long i = v.get<long long>();
  if (i < lo) throw ConfigError(key, fmt::format("must be >= {}", lo));
  return i;
}

bool GetBool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ConfigError(key, "expected true or false");
  return v.get<bool>();
}

std::string GetString(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key, "expected a string");
  return v.get<std::string>();
}

using Setter = std::function<void(RunConfig&, const json&, const std::string&)>;

const std::map<std::string, Setter, std::less<>>& Setters() {
  static const std::map<std::string, Setter, std::less<>> setters{
      {"p_values",
       [](RunConfig& c, const json& v, const std::string& k) {
         // A bare number is accepted as a one-element list.
         const json list = v.is_array() ? v : json::array({v});
         if (list.empty()) throw ConfigError(k, "needs at least one value");
         c.p_values.clear();
         for (const json& p : list) {
           const double value = GetNumber(p, k);
           if (!(value >= 0.0 && value <= 1.0)) {
             throw ConfigError(k, fmt::format("{} outside [0, 1]", value));
           }
           c.p_values.push_back(value);
         }
       }},
      {"steps",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.steps = static_cast<int>(GetInteger(v, k, 1));
         if (c.steps > 100000) throw ConfigError(k, "unreasonably large");
       }},
      {"recorded_steps",
       [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_array() || v.empty()) {
           throw ConfigError(k, "expected a non-empty list of steps");
         }
         c.recorded_steps.clear();
         for (const json& t : v) {
           c.recorded_steps.push_back(static_cast<int>(GetInteger(t, k, 1)));
         }
       }},
      {"mode",
       [](RunConfig& c, const json& v, const std::string& k) {
         const std::string name = GetString(v, k);
         if (name == "experimental") {
           c.mode = RunMode::kExperimental;
         } else if (name == "numerical") {
           c.mode = RunMode::kNumerical;
         } else {
           throw ConfigError(k, "expected 'experimental' or 'numerical'");
         }
       }},
      {"maps",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.maps = static_cast<std::size_t>(GetInteger(v, k, 1));
       }},
      {"master_seed",
       [](RunConfig& c, const json& v, const std::string& k) {
         if (!v.is_number_unsigned() &&
             !(v.is_number_integer() && v.get<long long>() >= 0)) {
           throw ConfigError(k, "expected a non-negative integer");
         }
         c.master_seed = v.get<std::uint64_t>();
       }},
      {"resample",
       [](RunConfig& c, const json& v, const std::string& k) {
         const auto mode = ResampleModeFromName(GetString(v, k));
         if (!mode) throw ConfigError(k, "expected 'any' or 'other'");
         c.resample = *mode;
       }},
      {"output_dir",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.output_dir = GetString(v, k);
         if (c.output_dir.empty()) throw ConfigError(k, "must not be empty");
       }},
      {"threads",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.threads = static_cast<unsigned>(GetInteger(v, k, 0));
       }},
      {"min_prob",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.min_prob = GetNumber(v, k);
         if (!(c.fit.min_prob >= 0.0 && c.fit.min_prob < 1.0)) {
           throw ConfigError(k, "must lie in [0, 1)");
         }
       }},
      {"b_min",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.b_min = GetNumber(v, k);
       }},
      {"b_max",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.b_max = GetNumber(v, k);
       }},
      {"light_cone_margin",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.light_cone_margin = static_cast<int>(GetInteger(v, k, 0));
       }},
      {"exclude_origin",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.exclude_origin = GetBool(v, k);
       }},
      {"spatial_step",
       [](RunConfig& c, const json& v, const std::string& k) {
         c.fit.spatial_step = static_cast<int>(GetInteger(v, k, 0));
       }},
  };
  return setters;
}

void ApplyLayer(RunConfig& config, const json& layer) {
  if (layer.is_null()) return;
  if (!layer.is_object()) throw ConfigError("<root>", "expected a JSON object");
  for (const auto& [key, _] : layer.items()) {
    if (!Setters().contains(key)) throw ConfigError(key, "unknown key");
  }
  if (const auto it = layer.find("mode"); it != layer.end()) {
    Setters().at("mode")(config, *it, "mode");
    if (!layer.contains("maps")) config.maps = PresetMaps(config.mode);
  }
  for (const auto& [key, value] : layer.items()) {
    if (key != "mode") Setters().find(key)->second(config, value, key);
  }
}

void Validate(const RunConfig& c) {
  for (int t : c.recorded_steps) {
    if (t > c.steps) {
      throw ConfigError("recorded_steps",
                        fmt::format("step {} exceeds steps={}", t, c.steps));
    }
  }
  if (!(c.fit.b_min > 0.0)) throw ConfigError("b_min", "must be positive");
  if (!(c.fit.b_max > c.fit.b_min)) throw ConfigError("b_max", "must exceed b_min");
  if (c.fit.spatial_step > c.steps) {
    throw ConfigError("spatial_step", "exceeds steps");
  }
  const int spatial = c.SpatialStep();
  if (std::find(c.recorded_steps.begin(), c.recorded_steps.end(), spatial) ==
      c.recorded_steps.end()) {
    throw ConfigError("spatial_step",
                      fmt::format("step {} is not in recorded_steps", spatial));
  }
}

}  // namespace

std::size_t PresetMaps(RunMode mode) {
  return mode == RunMode::kExperimental ? 400 : 10000;
}

std::string_view RunModeName(RunMode mode) {
  return mode == RunMode::kExperimental ? "experimental" : "numerical";
}

SpatialFitOptions FitSettings::ToOptions() const {
  SpatialFitOptions o;
  o.min_prob = min_prob;
  o.b_min = b_min;
  o.b_max = b_max;
  o.light_cone_margin = light_cone_margin;
  o.exclude_origin = exclude_origin;
  return o;
}

DisorderSpec RunConfig::Disorder(double p) const {
  DisorderSpec spec;
  spec.p = p;
  spec.maps = maps;
  spec.steps = steps;
  spec.recorded_steps = recorded_steps;
  spec.master_seed = master_seed;
  spec.resample = resample;
  return spec;
}

nlohmann::json RunConfig::ToJson() const {
  return json{
      {"p_values", p_values},
      {"steps", steps},
      {"recorded_steps", recorded_steps},
      {"mode", RunModeName(mode)},
      {"maps", maps},
      {"master_seed", master_seed},
      {"resample", ResampleModeName(resample)},
      {"min_prob", fit.min_prob},
      {"b_min", fit.b_min},
      {"b_max", fit.b_max},
      {"light_cone_margin", fit.light_cone_margin},
      {"exclude_origin", fit.exclude_origin},
      {"spatial_step", SpatialStep()},
  };
}

std::string RunConfig::Hash() const {
  return fmt::format("{:016x}", Fnv1a(ToJson().dump()));
}

RunConfig ResolveConfig(const nlohmann::json& file, const nlohmann::json& flags) {
  return ResolveConfig(std::initializer_list<nlohmann::json>{file, flags});
}

RunConfig ResolveConfig(std::initializer_list<nlohmann::json> layers) {
  RunConfig config;
  for (const nlohmann::json& layer : layers) ApplyLayer(config, layer);
  Validate(config);
  return config;
}

nlohmann::json ParseConfigText(std::string_view text) {
  if (std::all_of(text.begin(), text.end(),
                  [](unsigned char c) { return std::isspace(c); })) {
    return json::object();
  }
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("<file>", fmt::format("malformed JSON: {}", e.what()));
  }
}

}  // namespace qwalk
