#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "grlab/generators.hpp"
#include "grlab/grid.hpp"

namespace grlab::io {

// wgrid JSON: {"dim": n, "shape": [...], "weights": [...], "values": [...]},
// arrays row-major. Rejects missing or mistyped fields, NaN, infinities and
// negatives with a ValidationError naming the field.
WeightedGrid parse_wgrid_json(std::string_view text);

// 1D CSV: a header line, then "index,weight,value" rows covering 0..N-1.
WeightedGrid parse_wgrid_csv(std::string_view text);

// Dispatches on the extension (.csv -> CSV, anything else -> JSON).
WeightedGrid load_wgrid(const std::filesystem::path& path);

std::string to_wgrid_json(const WeightedGrid& wg);

// GenSpec JSON, e.g.
//   {"shape": [1024],
//    "function": {"kind": "power", "a": 0.3},
//    "measure": {"kind": "uniform"}}
// function kinds: power{a}, spike{M, position}, two_level{v_lo, v_hi, fraction},
// random{seed, log_sigma}; measure kinds: uniform, power_weight{b},
// spike_weight{W, position}, random_weight{seed, log_sigma}. position is a
// flat index, "first" or "last" (default).
gen::GenSpec parse_genspec(std::string_view text);
std::string genspec_to_json(const gen::GenSpec& spec);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

}  // namespace grlab::io
