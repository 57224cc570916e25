#pragma once

#include <string>
#include <string_view>

#include "qwalk/disorder.hpp"

namespace qwalk {

// JSON document with fields half_width, steps, p, master_seed, map_index,
// labels (row-major, one "I"/"B"/"R" string per cell, row t = step t) and an
// optional static_base array. One lattice row per line.
std::string SerializeCoinMap(const CoinMap& map);

// Inverse of SerializeCoinMap. Throws ParseError naming the line and field;
// never returns a partially filled map.
CoinMap ParseCoinMap(std::string_view text);

}  // namespace qwalk
