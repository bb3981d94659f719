#include "doctest.h"

#include <random>

#include "grlab/covering.hpp"
#include "grlab/errors.hpp"
#include "support/oracles.hpp"

using namespace grlab;

namespace {
WeightedGrid uniform_line(std::size_t n) {
  return WeightedGrid(Grid({n}), std::vector<double>(n, 1.0 / n), std::vector<double>(n, 1.0));
}

CellSet cells(const WeightedGrid& wg, std::initializer_list<std::size_t> idx) {
  std::vector<std::uint8_t> m(wg.grid().cell_count(), 0);
  for (auto i : idx) m[i] = 1;
  return CellSet(wg, std::move(m));
}
}  // namespace

TEST_CASE("cell sets") {
  const auto wg = WeightedGrid(Grid({4}), {1, 2, 3, 4}, {0, 5, 1, 7});
  const auto e = level_set_above(wg, 1.0);
  CHECK(e.size() == 2);
  CHECK(e.mass() == 6.0);
  CHECK(e.contains(1));
  CHECK_FALSE(e.contains(2));
  CHECK(e.consistent_with(wg));
  CHECK(level_set_above(wg, 7.0).empty());
  CHECK_THROWS_AS(CellSet(wg, std::vector<std::uint8_t>(3, 0)), ConfigError);
}

TEST_CASE("empty set gives an empty family") {
  const auto wg = uniform_line(8);
  const auto r = build_covering(wg, cells(wg, {}), 0.25, 0.25);
  CHECK(r.cubes.empty());
  CHECK(r.rho_lo == 0.0);
  CHECK(r.rho_hi == 0.0);
  CHECK(r.overlap == 1);
  CHECK(r.covered);
}

TEST_CASE("single seed grows to the first admissible cube") {
  const auto wg = uniform_line(8);
  const auto r = build_covering(wg, cells(wg, {0}), 0.25, 0.25);
  REQUIRE(r.cubes.size() == 1);
  CHECK(r.cubes[0] == Cube{{0}, 4});
  CHECK(r.rho_lo == 0.25);
  CHECK(r.rho_hi == 0.25);
  CHECK(r.overlap == 1);
}

TEST_CASE("two far seeds give two disjoint cubes") {
  const auto wg = uniform_line(8);
  const auto r = build_covering(wg, cells(wg, {0, 7}), 0.25, 0.25);
  REQUIRE(r.cubes.size() == 2);
  CHECK(r.cubes[0] == Cube{{0}, 4});
  CHECK(r.cubes[1] == Cube{{4}, 4});
  CHECK(r.overlap == 1);
  CHECK(r.covered);
}

TEST_CASE("covering preconditions") {
  const auto wg = uniform_line(8);
  CHECK_THROWS_AS(build_covering(wg, cells(wg, {0, 1, 2}), 0.25, 0.5), PreconditionError);
  CHECK_THROWS_AS(build_covering(wg, cells(wg, {0}), 0.5, 0.25), DomainError);
  CHECK_THROWS_AS(build_covering(wg, cells(wg, {0}), 0.0, 0.25), DomainError);
  CHECK_THROWS_AS(build_covering(wg, cells(wg, {0}), 0.5, 1.0), DomainError);
  const WeightedGrid rect(Grid({2, 4}), std::vector<double>(8, 1.0), std::vector<double>(8, 1.0));
  CHECK_THROWS_AS(build_covering(rect, cells(rect, {0}), 0.25, 0.25), ConfigError);
}

TEST_CASE("overlap constant examples") {
  const Grid g({8});
  const std::vector<Cube> disjoint{{{0}, 2}, {{2}, 2}, {{4}, 4}};
  CHECK(overlap_constant(disjoint, g) == 1);
  const std::vector<Cube> dup{{{1}, 3}, {{1}, 3}};
  CHECK(overlap_constant(dup, g) == 2);
  const std::vector<Cube> nested{{{0}, 8}, {{2}, 4}, {{3}, 1}};
  CHECK(overlap_constant(nested, g) == 3);
  CHECK(overlap_constant(std::vector<Cube>{}, g) == 1);
}

TEST_CASE("randomized coverings satisfy the covering inequalities") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const bool two_d = trial % 3 == 0;
    const std::size_t n = two_d ? 4 + rng() % 13 : 8 + rng() % 120;
    const auto wg = two_d ? testing::random_grid(rng, {n, n}) : testing::random_grid(rng, {n});
    const double rho = 0.05 + 0.4 * (rng() % 1000) / 1000.0;
    const double rho_cap = rho + (0.99 - rho) * (rng() % 1000) / 1000.0;

    // E = {f > s} with s the smallest value keeping mu(E) <= rho mu(Q_0)
    std::vector<double> vals(wg.values().begin(), wg.values().end());
    std::sort(vals.begin(), vals.end());
    CellSet e;
    for (double s : vals) {
      e = level_set_above(wg, s);
      if (e.mass() <= rho * wg.total_mass()) break;
    }

    const auto r = build_covering(wg, e, rho, rho_cap);
    CHECK(r.covered);
    CHECK(r.overlap == overlap_constant(r.cubes, wg.grid()));
    if (r.cubes.empty()) continue;
    CHECK(r.rho_lo <= r.rho_hi);
    CHECK(r.rho_hi <= rho_cap);

    double sum_q = 0.0, sum_qe = 0.0;
    for (const auto& q : r.cubes) {
      const auto s = testing::naive_sums(wg, q);
      double in_e = 0.0;
      for (auto i : testing::naive_cells(wg.grid(), q))
        if (e.contains(i)) in_e += wg.weight(i);
      CHECK(in_e <= rho_cap * s.mass * (1 + 1e-12));
      sum_q += s.mass;
      sum_qe += in_e;
    }
    CHECK(sum_qe >= e.mass() * (1 - 1e-12));
    CHECK(sum_qe <= r.overlap * e.mass() * (1 + 1e-12));
    CHECK(sum_q >= e.mass() / rho_cap * (1 - 1e-12));
    CHECK(sum_q <= r.overlap * e.mass() / r.rho_lo * (1 + 1e-12));

    const auto again = build_covering(wg, e, rho, rho_cap);
    CHECK(again.cubes == r.cubes);
  }
}
