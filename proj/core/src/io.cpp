#include "grlab/io.hpp"

#include <openssl/evp.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "grlab/errors.hpp"
#include "json.hpp"

namespace grlab::io {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const json& field(const json& obj, const char* name, const std::string& where) {
  const auto it = obj.find(name);
  if (it == obj.end()) throw ValidationError(where + ": missing field \"" + name + "\"");
  return *it;
}

double number(const json& obj, const char* name, const std::string& where) {
  const json& v = field(obj, name, where);
  if (!v.is_number()) throw ValidationError(where + ": field \"" + name + "\" must be a number");
  return v.get<double>();
}

double number_or(const json& obj, const char* name, double fallback, const std::string& where) {
  return obj.contains(name) ? number(obj, name, where) : fallback;
}

std::uint64_t unsigned_or(const json& obj, const char* name, std::uint64_t fallback, const std::string& where) {
  if (!obj.contains(name)) return fallback;
  const json& v = obj.at(name);
  if (!v.is_number_unsigned()) throw ValidationError(where + ": field \"" + name + "\" must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

gen::Position position_or_last(const json& obj, const std::string& where) {
  if (!obj.contains("position")) return std::nullopt;
  const json& v = obj.at("position");
  if (v.is_string()) {
    if (v == "last") return std::nullopt;
    if (v == "first") return 0;
  } else if (v.is_number_unsigned()) {
    return v.get<std::size_t>();
  }
  throw ValidationError(where + ": field \"position\" must be a cell index, \"first\" or \"last\"");
}

json position_json(const gen::Position& p) { return p ? json(*p) : json("last"); }

std::vector<double> nonneg_array(const json& doc, const char* name) {
  const json& arr = field(doc, name, "wgrid");
  if (!arr.is_array()) throw ValidationError(std::string("wgrid: field \"") + name + "\" must be an array");
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& v = arr[i];
    if (!v.is_number()) {
      throw ValidationError(std::string("wgrid: ") + name + "[" + std::to_string(i) + "] is not a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
      throw ValidationError(std::string("wgrid: ") + name + "[" + std::to_string(i) + "] is not finite");
    }
    if (x < 0.0) throw ValidationError(std::string("wgrid: ") + name + "[" + std::to_string(i) + "] is negative");
    out.push_back(x);
  }
  return out;
}

WeightedGrid checked(Grid grid, std::vector<double> weights, std::vector<double> values) {
  if (weights.size() != grid.cell_count()) {
    throw ValidationError("wgrid: field \"weights\" has " + std::to_string(weights.size()) + " entries, shape needs " +
                          std::to_string(grid.cell_count()));
  }
  if (values.size() != grid.cell_count()) {
    throw ValidationError("wgrid: field \"values\" has " + std::to_string(values.size()) + " entries, shape needs " +
                          std::to_string(grid.cell_count()));
  }
  WeightedGrid wg(std::move(grid), std::move(weights), std::move(values));
  require_valid(wg);
  return wg;
}

double parse_csv_number(const std::string& cell, std::size_t line, const char* column) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cell.size()) {
    throw ValidationError("csv line " + std::to_string(line) + ": column " + column + " is not a number");
  }
  if (!std::isfinite(x)) throw ValidationError("csv line " + std::to_string(line) + ": column " + column + " is not finite");
  if (x < 0.0) throw ValidationError("csv line " + std::to_string(line) + ": column " + column + " is negative");
  return x;
}

}  // namespace

WeightedGrid parse_wgrid_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {  // includes overflow, e.g. 1e400
    throw ValidationError(std::string("wgrid: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("wgrid: top level must be an object");
  const json& dim = field(doc, "dim", "wgrid");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() < 1) {
    throw ValidationError("wgrid: field \"dim\" must be a positive integer");
  }
  const json& shape_json = field(doc, "shape", "wgrid");
  if (!shape_json.is_array() || shape_json.size() != dim.get<std::size_t>()) {
    throw ValidationError("wgrid: field \"shape\" must be an array of length dim");
  }
  std::vector<std::size_t> shape;
  for (const auto& e : shape_json) {
    if (!e.is_number_unsigned() || e.get<std::size_t>() < 1) {
      throw ValidationError("wgrid: field \"shape\" entries must be positive integers");
    }
    shape.push_back(e.get<std::size_t>());
  }
  auto weights = nonneg_array(doc, "weights");
  auto values = nonneg_array(doc, "values");
  return checked(Grid(std::move(shape)), std::move(weights), std::move(values));
}

WeightedGrid parse_wgrid_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("csv: missing header line");
  std::vector<double> weights;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 3) throw ValidationError("csv line " + std::to_string(lineno) + ": expected index,weight,value");
    const double index = parse_csv_number(cells[0], lineno, "index");
    if (index != static_cast<double>(weights.size())) {
      throw ValidationError("csv line " + std::to_string(lineno) + ": index must be " + std::to_string(weights.size()));
    }
    weights.push_back(parse_csv_number(cells[1], lineno, "weight"));
    values.push_back(parse_csv_number(cells[2], lineno, "value"));
  }
  if (weights.empty()) throw ValidationError("csv: no data rows");
  const std::size_t n = weights.size();
  return checked(Grid({n}), std::move(weights), std::move(values));
}

WeightedGrid load_wgrid(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  if (path.extension() == ".csv") return parse_wgrid_csv(text);
  return parse_wgrid_json(text);
}

std::string to_wgrid_json(const WeightedGrid& wg) {
  json doc;
  doc["dim"] = wg.grid().dim();
  doc["shape"] = wg.grid().shape();
  doc["weights"] = std::vector<double>(wg.weights().begin(), wg.weights().end());
  doc["values"] = std::vector<double>(wg.values().begin(), wg.values().end());
  return doc.dump() + "\n";
}

gen::GenSpec parse_genspec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {  // includes overflow, e.g. 1e400
    throw ConfigError(std::string("genspec: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("genspec: top level must be an object");

  gen::GenSpec spec;
  const json& shape = field(doc, "shape", "genspec");
  if (!shape.is_array() || shape.empty()) throw ConfigError("genspec: field \"shape\" must be a non-empty array");
  for (const auto& e : shape) {
    if (!e.is_number_unsigned()) throw ConfigError("genspec: field \"shape\" entries must be positive integers");
    spec.shape.push_back(e.get<std::size_t>());
  }

  const json& f = field(doc, "function", "genspec");
  if (!f.is_object()) throw ConfigError("genspec: field \"function\" must be an object");
  const json& fkind = field(f, "kind", "genspec.function");
  const std::string fw = "genspec.function";
  if (fkind == "power") {
    spec.function = gen::Power{number(f, "a", fw)};
  } else if (fkind == "spike") {
    spec.function = gen::Spike{number_or(f, "M", 1.0, fw), position_or_last(f, fw)};
  } else if (fkind == "two_level") {
    spec.function = gen::TwoLevel{number(f, "v_lo", fw), number(f, "v_hi", fw), number(f, "fraction", fw)};
  } else if (fkind == "random") {
    spec.function = gen::RandomValues{unsigned_or(f, "seed", 0, fw), number_or(f, "log_sigma", 1.0, fw)};
  } else {
    throw ConfigError("genspec.function: unknown kind " + fkind.dump());
  }

  if (doc.contains("measure")) {
    const json& m = doc.at("measure");
    const std::string mw = "genspec.measure";
    if (!m.is_object()) throw ConfigError("genspec: field \"measure\" must be an object");
    const json& mkind = field(m, "kind", mw);
    if (mkind == "uniform") {
      spec.measure = gen::Uniform{};
    } else if (mkind == "power_weight") {
      spec.measure = gen::PowerWeight{number(m, "b", mw)};
    } else if (mkind == "spike_weight") {
      spec.measure = gen::SpikeWeight{number(m, "W", mw), position_or_last(m, mw)};
    } else if (mkind == "random_weight") {
      spec.measure = gen::RandomWeight{unsigned_or(m, "seed", 0, mw), number_or(m, "log_sigma", 1.0, mw)};
    } else {
      throw ConfigError("genspec.measure: unknown kind " + mkind.dump());
    }
  }
  spec.validate();
  return spec;
}

std::string genspec_to_json(const gen::GenSpec& spec) {
  json doc;
  doc["shape"] = spec.shape;
  doc["function"] = std::visit(
      Overloaded{
          [](const gen::Power& p) { return json{{"kind", "power"}, {"a", p.a}}; },
          [](const gen::Spike& s) { return json{{"kind", "spike"}, {"M", s.height}, {"position", position_json(s.position)}}; },
          [](const gen::TwoLevel& t) {
            return json{{"kind", "two_level"}, {"v_lo", t.v_lo}, {"v_hi", t.v_hi}, {"fraction", t.fraction}};
          },
          [](const gen::RandomValues& r) { return json{{"kind", "random"}, {"seed", r.seed}, {"log_sigma", r.log_sigma}}; },
      },
      spec.function);
  doc["measure"] = std::visit(
      Overloaded{
          [](const gen::Uniform&) { return json{{"kind", "uniform"}}; },
          [](const gen::PowerWeight& p) { return json{{"kind", "power_weight"}, {"b", p.b}}; },
          [](const gen::SpikeWeight& s) {
            return json{{"kind", "spike_weight"}, {"W", s.factor}, {"position", position_json(s.position)}};
          },
          [](const gen::RandomWeight& r) {
            return json{{"kind", "random_weight"}, {"seed", r.seed}, {"log_sigma", r.log_sigma}};
          },
      },
      spec.measure);
  return doc.dump();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw ConfigError("write failed for " + path.string());
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

}  // namespace grlab::io
