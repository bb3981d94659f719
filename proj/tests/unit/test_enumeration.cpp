#include "doctest.h"

#include <set>

#include "grlab/enumeration.hpp"
#include "grlab/errors.hpp"
#include "grlab/scan.hpp"
#include "support/oracles.hpp"

using namespace grlab;

TEST_CASE("counting examples") {
  CHECK(enumerate_cubes(Grid({4}), EnumerationMode::all()).size() == 10);
  CHECK(enumerate_cubes(Grid({4}), EnumerationMode::dyadic()).size() == 7);

  std::size_t expected = 0;
  for (std::size_t s = 1; s <= 4; ++s) expected += (4 - s + 1) * (4 - s + 1);
  CHECK(expected == 30);
  CHECK(enumerate_cubes(Grid({4, 4}), EnumerationMode::all()).size() == expected);
}

TEST_CASE("dyadic cubes have aligned origins and ascending sides") {
  const auto cubes = enumerate_cubes(Grid({8, 8}), EnumerationMode::dyadic());
  CHECK(cubes.size() == 64 + 16 + 4 + 1);
  for (std::size_t i = 0; i < cubes.size(); ++i) {
    for (auto o : cubes[i].origin) CHECK(o % cubes[i].side == 0);
    if (i) CHECK(cubes[i - 1].side <= cubes[i].side);
  }
  CHECK(cubes.back() == Cube{{0, 0}, 8});
}

TEST_CASE("all mode emits every cube exactly once in canonical order") {
  for (std::size_t n = 1; n <= 16; ++n) {
    for (const auto& shape : {std::vector<std::size_t>{n}, std::vector<std::size_t>{n, n}}) {
      const Grid g(shape);
      const auto cubes = enumerate_cubes(g, EnumerationMode::all());
      const auto oracle = testing::naive_cubes(g);
      CHECK(cubes == oracle);
      const std::set<Cube> unique(cubes.begin(), cubes.end());
      CHECK(unique.size() == cubes.size());
    }
  }
}

TEST_CASE("non-square grids and 3D") {
  const auto cubes = enumerate_cubes(Grid({3, 5}), EnumerationMode::all());
  CHECK(cubes == testing::naive_cubes(Grid({3, 5})));
  const auto c3 = enumerate_cubes(Grid({3, 3, 3}), EnumerationMode::all());
  CHECK(c3.size() == 27 + 8 + 1);
}

TEST_CASE("random access agrees with sequential iteration") {
  const CubeFamily fam(Grid({7, 9}), EnumerationMode::all());
  const auto seq = enumerate_cubes(Grid({7, 9}), EnumerationMode::all());
  for (std::uint64_t i = 0; i < fam.size(); i += 3) CHECK(fam.at(i) == seq[i]);
}

TEST_CASE("enumeration is deterministic, sampling included") {
  const Grid g({32});
  CHECK(enumerate_cubes(g, EnumerationMode::all()) == enumerate_cubes(g, EnumerationMode::all()));
  const auto a = enumerate_cubes(g, EnumerationMode::sample(100, 7));
  const auto b = enumerate_cubes(g, EnumerationMode::sample(100, 7));
  const auto c = enumerate_cubes(g, EnumerationMode::sample(100, 8));
  CHECK(a.size() == 100);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& q : a) CHECK(g.contains(q));
  // samples come out in canonical order
  const auto key = [](const Cube& q) { return std::make_pair(q.side, q.origin); };
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(key(a[i - 1]) <= key(a[i]));
}

TEST_CASE("invalid mode and grid combinations") {
  CHECK_THROWS_AS(CubeFamily(Grid({6}), EnumerationMode::dyadic()), ConfigError);
  CHECK_THROWS_AS(CubeFamily(Grid({2, 2, 2, 2}), EnumerationMode::all()), ConfigError);
  CHECK_NOTHROW(CubeFamily(Grid({2, 2, 2, 2}), EnumerationMode::dyadic()));
  CHECK_THROWS_AS(EnumerationMode::parse("sample:0:1"), ConfigError);
  CHECK_THROWS_AS(EnumerationMode::parse("bogus"), ConfigError);
  CHECK(EnumerationMode::parse("sample:12:34") == EnumerationMode::sample(12, 34));
  CHECK(EnumerationMode::parse("sample:12:34").to_string() == "sample:12:34");
  CHECK(EnumerationMode::default_for(Grid({8})) == EnumerationMode::all());
  CHECK(EnumerationMode::default_for(Grid({8, 8})) == EnumerationMode::dyadic());
}

TEST_CASE("scan_reduce result is independent of thread count") {
  const CubeFamily fam(Grid({40}), EnumerationMode::all());
  auto run = [&](unsigned threads) {
    return scan_reduce(
        fam, threads, MaxCube{},
        [](MaxCube& acc, const Cube& q, std::uint64_t i) { acc.offer(static_cast<double>(q.side % 7), i, q); },
        [](MaxCube& a, const MaxCube& b) { a.merge(b); });
  };
  const auto one = run(1);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto r = run(t);
    CHECK(r.value == one.value);
    CHECK(r.index == one.index);
    CHECK(r.cube == one.cube);
  }
  CHECK(one.cube.side == 6);
  CHECK(one.cube.origin[0] == 0);
}
