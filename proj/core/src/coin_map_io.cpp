#include "qwalk/coin_map_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

using nlohmann::json;

void AppendLabels(std::string& out, std::span<const CoinLabel> labels,
                  std::size_t per_line, std::string_view indent) {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i % per_line == 0) fmt::format_to(std::back_inserter(out), "\n{}", indent);
    fmt::format_to(std::back_inserter(out), "\"{}\"", CoinLabelCode(labels[i]));
    if (i + 1 < labels.size()) out += i % per_line + 1 == per_line ? "," : ", ";
  }
}

std::size_t LineAtOffset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(
                 std::count(text.begin(), text.begin() + offset, '\n'));
}

std::size_t LineOfKey(std::string_view text, std::string_view key) {
  const std::string quoted = fmt::format("\"{}\"", key);
  const auto pos = text.find(quoted);
  return pos == std::string_view::npos ? 0 : LineAtOffset(text, pos);
}

class Reader {
 public:
  Reader(std::string_view text, const json& doc) : text_(text), doc_(doc) {}

  const json& Require(std::string_view key) const {
    const auto it = doc_.find(key);
    if (it == doc_.end()) {
      throw ParseError(0, std::string(key), "missing required field");
    }
    return *it;
  }

  [[noreturn]] void Fail(std::string_view key, const std::string& what) const {
    throw ParseError(LineOfKey(text_, key), std::string(key), what);
  }

  int Int(std::string_view key, int lo) const {
    const json& v = Require(key);
    if (!v.is_number_integer() || v.get<long long>() < lo ||
        v.get<long long>() > std::numeric_limits<int>::max()) {
      Fail(key, fmt::format("expected integer >= {}", lo));
    }
    return v.get<int>();
  }

  std::uint64_t Uint64(std::string_view key) const {
    const json& v = Require(key);
    if (!v.is_number_unsigned() &&
        !(v.is_number_integer() && v.get<long long>() >= 0)) {
      Fail(key, "expected non-negative integer");
    }
    return v.get<std::uint64_t>();
  }

  double Probability(std::string_view key) const {
    const json& v = Require(key);
    if (!v.is_number() || !(v.get<double>() >= 0.0 && v.get<double>() <= 1.0)) {
      Fail(key, "expected number in [0, 1]");
    }
    return v.get<double>();
  }

  std::vector<CoinLabel> Labels(std::string_view key, const json& v,
                                std::size_t expected) const {
    if (!v.is_array()) Fail(key, "expected array of coin labels");
    if (v.size() != expected) {
      Fail(key, fmt::format("expected {} labels, found {}", expected, v.size()));
    }
    std::vector<CoinLabel> labels;
    labels.reserve(expected);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const json& cell = v[i];
      std::optional<CoinLabel> label;
      if (cell.is_string() && cell.get_ref<const std::string&>().size() == 1) {
        label = CoinLabelFromCode(cell.get_ref<const std::string&>()[0]);
      }
      if (!label) {
        Fail(key, fmt::format("entry {} is not one of \"I\", \"B\", \"R\"", i));
      }
      labels.push_back(*label);
    }
    return labels;
  }

 private:
  std::string_view text_;
  const json& doc_;
};

}  // namespace

std::string SerializeCoinMap(const CoinMap& map) {
  std::string out = "{\n";
  auto out_it = std::back_inserter(out);
  fmt::format_to(out_it, "  \"half_width\": {},\n", map.half_width);
  fmt::format_to(out_it, "  \"steps\": {},\n", map.steps);
  fmt::format_to(out_it, "  \"p\": {},\n", json(map.p).dump());
  fmt::format_to(out_it, "  \"master_seed\": {},\n", map.master_seed);
  fmt::format_to(out_it, "  \"map_index\": {},\n", map.map_index);
  if (map.static_base) {
    out += "  \"static_base\": [";
    AppendLabels(out, map.static_base->labels, map.width(), "    ");
    out += "\n  ],\n";
  }
  out += "  \"labels\": [";
  AppendLabels(out, map.labels, map.width(), "    ");
  out += "\n  ]\n}\n";
  return out;
}

CoinMap ParseCoinMap(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(LineAtOffset(text, e.byte == 0 ? 0 : e.byte - 1), "",
                     "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError(1, "", "expected a JSON object");

  const Reader r(text, doc);
  static constexpr std::array<std::string_view, 7> kKnown{
      "half_width", "steps",  "p", "master_seed",
      "map_index",  "labels", "static_base"};
  for (const auto& [key, _] : doc.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      r.Fail(key, "unknown field");
    }
  }

  CoinMap map;
  map.half_width = r.Int("half_width", 1);
  map.steps = r.Int("steps", 1);
  map.p = r.Probability("p");
  map.master_seed = r.Uint64("master_seed");
  map.map_index = r.Uint64("map_index");
  map.labels = r.Labels("labels", r.Require("labels"),
                        static_cast<std::size_t>(map.steps) * map.width());
  if (const auto it = doc.find("static_base"); it != doc.end()) {
    map.static_base =
        StaticMap{map.half_width, r.Labels("static_base", *it, map.width())};
  }
  return map;
}

}  // namespace qwalk
