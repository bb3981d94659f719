#include "doctest.h"

#include <numeric>

#include "grlab/errors.hpp"
#include "grlab/generators.hpp"
#include "grlab/oscillation.hpp"

using namespace grlab;

TEST_CASE("two_level with equal levels is constant") {
  const auto wg = gen::generate({gen::TwoLevel{1, 1, 0.5}, gen::Uniform{}, {16}});
  for (double v : wg.values()) CHECK(v == 1.0);
  CHECK(gen::measured_epsilon({gen::TwoLevel{1, 1, 0.5}, gen::Uniform{}, {16}}, EnumerationMode::all()) == 0.0);
}

TEST_CASE("two_level split by cell centres") {
  const auto wg = gen::generate({gen::TwoLevel{1, 5, 0.25}, gen::Uniform{}, {4, 2}});
  CHECK(wg.values()[0] == 5);
  CHECK(wg.values()[1] == 5);
  for (std::size_t i = 2; i < 8; ++i) CHECK(wg.values()[i] == 1);
}

TEST_CASE("spike") {
  const gen::GenSpec spec{gen::Spike{1.0, std::nullopt}, gen::Uniform{}, {4}};
  const auto wg = gen::generate(spec);
  CHECK(std::vector<double>(wg.values().begin(), wg.values().end()) == std::vector<double>{0, 0, 0, 1});
  CHECK(std::vector<double>(wg.weights().begin(), wg.weights().end()) == std::vector<double>(4, 0.25));
  CHECK(gen::measured_epsilon(spec, EnumerationMode::all()) == 1.5);
  CHECK(gen::measured_epsilon({gen::Spike{3.0, 0}, gen::Uniform{}, {64}}, EnumerationMode::all()) > 1.0);
}

TEST_CASE("power function cell averages") {
  const auto wg = gen::generate({gen::Power{0.5}, gen::Uniform{}, {4}});
  CHECK(wg.values()[0] == doctest::Approx(4.0).epsilon(1e-15));
  for (double a : {0.1, 0.5, 0.9}) {
    const auto g = gen::generate({gen::Power{a}, gen::Uniform{}, {1000}});
    double integral = 0.0;
    for (std::size_t i = 0; i < 1000; ++i) integral += g.weight(i) * g.value(i);
    CHECK(integral == doctest::Approx(1.0 / (1.0 - a)).epsilon(1e-12));
    for (std::size_t i = 1; i < 1000; ++i) CHECK(g.value(i) < g.value(i - 1));
  }
}

TEST_CASE("power weight masses") {
  const auto wg = gen::generate({gen::TwoLevel{}, gen::PowerWeight{-0.5}, {100}});
  CHECK(wg.total_mass() == doctest::Approx(2.0).epsilon(1e-13));
  const auto g2 = gen::generate({gen::TwoLevel{}, gen::PowerWeight{2.0}, {10, 10}});
  CHECK(g2.total_mass() == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("spike weight is not doubling") {
  const auto wg = gen::generate({gen::TwoLevel{}, gen::SpikeWeight{1e6, 10}, {32}});
  CHECK(wg.weight(10) / wg.weight(11) >= 1e6);
  CHECK(wg.weight(10) / wg.weight(9) >= 1e6);
}

TEST_CASE("random kinds are deterministic") {
  const gen::GenSpec a{gen::RandomValues{42, 1.0}, gen::RandomWeight{43, 2.0}, {8, 8}};
  const auto x = gen::generate(a);
  const auto y = gen::generate(a);
  CHECK(std::equal(x.values().begin(), x.values().end(), y.values().begin()));
  CHECK(std::equal(x.weights().begin(), x.weights().end(), y.weights().begin()));
  const auto z = gen::generate({gen::RandomValues{44, 1.0}, gen::RandomWeight{43, 2.0}, {8, 8}});
  CHECK_FALSE(std::equal(x.values().begin(), x.values().end(), z.values().begin()));
  for (double v : x.values()) CHECK(v > 0.0);
  // log-values have roughly unit spread
  const auto big = gen::generate({gen::RandomValues{1, 1.0}, gen::Uniform{}, {20000}});
  double s = 0.0, s2 = 0.0;
  for (double v : big.values()) {
    s += std::log(v);
    s2 += std::log(v) * std::log(v);
  }
  CHECK(std::abs(s / 20000) < 0.05);
  CHECK(s2 / 20000 == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(gen::generate({gen::Power{1.2}, gen::Uniform{}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::Power{0.0}, gen::Uniform{}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::Power{0.5}, gen::Uniform{}, {8, 8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::Spike{1.0, 8}, gen::Uniform{}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::Spike{-1.0, 0}, gen::Uniform{}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::TwoLevel{1, 2, 1.5}, gen::Uniform{}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::TwoLevel{}, gen::PowerWeight{-1.0}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::TwoLevel{}, gen::SpikeWeight{0.0, 0}, {8}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::TwoLevel{}, gen::Uniform{}, {}}), ConfigError);
  CHECK_THROWS_AS(gen::generate({gen::TwoLevel{}, gen::Uniform{}, {4, 0}}), ConfigError);
}
