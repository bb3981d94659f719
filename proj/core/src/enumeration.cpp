#include "grlab/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <random>

#include "grlab/errors.hpp"

namespace grlab {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("invalid " + std::string(what) + " in enumeration mode: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

EnumerationMode EnumerationMode::default_for(const Grid& grid) {
  return grid.dim() == 1 ? all() : dyadic();
}

EnumerationMode EnumerationMode::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "dyadic") return dyadic();
  constexpr std::string_view prefix = "sample:";
  if (text.starts_with(prefix)) {
    const auto rest = text.substr(prefix.size());
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ConfigError("sample mode must be sample:COUNT:SEED");
    const auto count = parse_u64(rest.substr(0, colon), "count");
    const auto seed = parse_u64(rest.substr(colon + 1), "seed");
    if (count == 0) throw ConfigError("sample mode needs COUNT >= 1");
    return sample(count, seed);
  }
  throw ConfigError("unknown enumeration mode '" + std::string(text) + "' (expected all, dyadic or sample:COUNT:SEED)");
}

std::string EnumerationMode::to_string() const {
  switch (kind) {
    case Kind::all:
      return "all";
    case Kind::dyadic:
      return "dyadic";
    case Kind::random_sample:
      return "sample:" + std::to_string(count) + ":" + std::to_string(seed);
  }
  return "?";
}

CubeFamily::CubeFamily(const Grid& grid, const EnumerationMode& mode) : grid_(grid), mode_(mode) {
  const std::size_t n = grid.dim();
  const std::size_t max_side = grid.min_extent();
  if (mode.kind == EnumerationMode::Kind::dyadic) {
    for (auto e : grid.shape()) {
      if (!is_power_of_two(e)) throw ConfigError("dyadic enumeration requires power-of-two extents");
    }
    for (std::size_t side = 1; side <= max_side; side *= 2) {
      SideBlock b{side, side, std::vector<std::uint64_t>(n), structured_size_, 1};
      for (std::size_t k = 0; k < n; ++k) {
        b.positions[k] = grid.extent(k) / side;
        b.count *= b.positions[k];
      }
      structured_size_ += b.count;
      blocks_.push_back(std::move(b));
    }
  } else {
    if (n > 3) throw ConfigError("all-subcube enumeration supports dimensions 1 to 3; use dyadic");
    for (std::size_t side = 1; side <= max_side; ++side) {
      SideBlock b{side, 1, std::vector<std::uint64_t>(n), structured_size_, 1};
      for (std::size_t k = 0; k < n; ++k) {
        b.positions[k] = grid.extent(k) - side + 1;
        b.count *= b.positions[k];
      }
      structured_size_ += b.count;
      blocks_.push_back(std::move(b));
    }
  }

  if (mode.kind == EnumerationMode::Kind::random_sample) {
    if (mode.count == 0) throw ConfigError("sample mode needs COUNT >= 1");
    std::mt19937_64 gen(mode.seed);
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % structured_size_ + 1) % structured_size_;
    samples_.reserve(mode.count);
    while (samples_.size() < mode.count) {
      const std::uint64_t r = gen();
      if (r > limit) continue;
      samples_.push_back(r % structured_size_);
    }
    std::sort(samples_.begin(), samples_.end());  // canonical order, duplicates kept
    size_ = mode.count;
  } else {
    size_ = structured_size_;
  }
}

Cube CubeFamily::at(std::uint64_t index) const {
  Cube c;
  at(index, c);
  return c;
}

void CubeFamily::at(std::uint64_t index, Cube& out) const {
  if (index >= size_) throw ConfigError("cube index out of range");
  if (mode_.kind == EnumerationMode::Kind::random_sample) {
    at_structured(samples_[index], out);
  } else {
    at_structured(index, out);
  }
}

void CubeFamily::at_structured(std::uint64_t index, Cube& out) const {
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), index,
                             [](std::uint64_t i, const SideBlock& b) { return i < b.offset; });
  const SideBlock& b = *std::prev(it);
  std::uint64_t local = index - b.offset;
  const std::size_t n = grid_.dim();
  out.side = b.side;
  out.origin.resize(n);
  for (std::size_t k = n; k-- > 0;) {
    out.origin[k] = static_cast<std::size_t>(local % b.positions[k]) * b.step;
    local /= b.positions[k];
  }
}

void CubeFamily::advance(Cube& c) const {
  // Locate the block of the current side; sides are ascending.
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), c.side,
                             [](const SideBlock& b, std::size_t s) { return b.side < s; });
  const SideBlock& b = *it;
  for (std::size_t k = grid_.dim(); k-- > 0;) {
    c.origin[k] += b.step;
    if (c.origin[k] / b.step < b.positions[k]) return;
    c.origin[k] = 0;
  }
  // Rolled over: first cube of the next side.
  const auto next = std::next(it);
  if (next != blocks_.end()) c.side = next->side;
}

std::vector<Cube> enumerate_cubes(const Grid& grid, const EnumerationMode& mode) {
  const CubeFamily family(grid, mode);
  std::vector<Cube> out;
  out.reserve(family.size());
  family.visit(0, family.size(), [&](const Cube& c, std::uint64_t) { out.push_back(c); });
  return out;
}

}  // namespace grlab
