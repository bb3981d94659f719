#include "doctest.h"

#include <filesystem>

#include "grlab/errors.hpp"
#include "grlab/io.hpp"

using namespace grlab;

namespace {
std::string message_of(std::string_view text) {
  try {
    io::parse_wgrid_json(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}
}  // namespace

TEST_CASE("wgrid json round trip") {
  const auto wg = io::parse_wgrid_json(R"({"dim":2,"shape":[2,3],"weights":[1,2,3,4,5,6],"values":[0,0.5,1,1.5,2,2.5]})");
  CHECK(wg.grid().shape() == std::vector<std::size_t>{2, 3});
  CHECK(wg.weight(5) == 6);
  CHECK(wg.value(1) == 0.5);
  const auto text = io::to_wgrid_json(wg);
  CHECK(text.back() == '\n');
  const auto again = io::parse_wgrid_json(text);
  CHECK(io::to_wgrid_json(again) == text);
}

TEST_CASE("wgrid json rejects bad input with the field named") {
  CHECK(message_of(R"({"dim":1,"shape":[2],"weights":[1,-1],"values":[0,1]})").find("weights[1]") != std::string::npos);
  CHECK(message_of(R"({"dim":1,"shape":[2],"weights":[1,1],"values":[0,-2]})").find("values[1]") != std::string::npos);
  CHECK(message_of(R"({"dim":1,"shape":[2],"weights":[1,1]})").find("\"values\"") != std::string::npos);
  CHECK(message_of(R"({"dim":1,"shape":[2],"weights":[1,1,1],"values":[0,1]})").find("\"weights\"") != std::string::npos);
  CHECK(message_of(R"({"dim":1,"shape":[2],"weights":[1,"x"],"values":[0,1]})").find("weights[1]") != std::string::npos);
  CHECK(message_of(R"({"dim":2,"shape":[2],"weights":[1,1],"values":[0,1]})").find("\"shape\"") != std::string::npos);
  CHECK_FALSE(message_of(R"({"dim":1,"shape":[2],"weights":[0,0],"values":[0,1]})").empty());
  CHECK_FALSE(message_of(R"({"dim":1,"shape":[2],"weights":[1,1e400],"values":[0,1]})").empty());
  CHECK_FALSE(message_of(R"({"dim":1,"shape":[2],"weights":[1,NaN],"values":[0,1]})").empty());
  CHECK_FALSE(message_of("{not json").empty());
  CHECK_FALSE(message_of("[1,2]").empty());
  CHECK_THROWS_AS(io::parse_wgrid_json(R"({"dim":1,"shape":[2],"weights":[1,-1],"values":[0,1]})"), ValidationError);
}

TEST_CASE("wgrid csv") {
  const auto wg = io::parse_wgrid_csv("index,weight,value\n0,1,2\n1,3,4\n2,0.5,0\n");
  CHECK(wg.grid().shape() == std::vector<std::size_t>{3});
  CHECK(wg.weight(1) == 3);
  CHECK(wg.value(0) == 2);
  CHECK_THROWS_AS(io::parse_wgrid_csv("index,weight,value\n0,1,2\n2,3,4\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_wgrid_csv("index,weight,value\n0,-1,2\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_wgrid_csv("index,weight,value\n0,1\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_wgrid_csv("index,weight,value\n0,1,abc\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_wgrid_csv("index,weight,value\n"), ValidationError);
  CHECK_THROWS_AS(io::parse_wgrid_csv(""), ValidationError);
}

TEST_CASE("load_wgrid dispatches on extension") {
  const auto dir = std::filesystem::temp_directory_path() / "grlab_test_io";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.csv", "index,weight,value\n0,1,2\n");
  io::write_file(dir / "a.json", R"({"dim":1,"shape":[1],"weights":[1],"values":[2]})");
  CHECK(io::load_wgrid(dir / "a.csv").value(0) == 2);
  CHECK(io::load_wgrid(dir / "a.json").value(0) == 2);
  CHECK_THROWS_AS(io::load_wgrid(dir / "missing.json"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("genspec parsing and round trip") {
  const auto spec = io::parse_genspec(
      R"({"shape":[1024],"function":{"kind":"power","a":0.3},"measure":{"kind":"uniform"}})");
  CHECK(std::get<gen::Power>(spec.function).a == 0.3);
  CHECK(std::holds_alternative<gen::Uniform>(spec.measure));
  CHECK(spec.shape == std::vector<std::size_t>{1024});

  const auto spike = io::parse_genspec(
      R"({"shape":[8,8],"function":{"kind":"spike","M":2,"position":"first"},"measure":{"kind":"spike_weight","W":1e6}})");
  CHECK(std::get<gen::Spike>(spike.function).position == std::optional<std::size_t>(0));
  CHECK_FALSE(std::get<gen::SpikeWeight>(spike.measure).position.has_value());
  CHECK(std::get<gen::SpikeWeight>(spike.measure).factor == 1e6);

  for (const auto* text : {
           R"({"shape":[16],"function":{"kind":"two_level","v_lo":1,"v_hi":3,"fraction":0.25},"measure":{"kind":"power_weight","b":-0.5}})",
           R"({"shape":[4,4],"function":{"kind":"random","seed":7,"log_sigma":1.5},"measure":{"kind":"random_weight","seed":8,"log_sigma":0.5}})",
           R"({"shape":[4],"function":{"kind":"spike","M":1,"position":3},"measure":{"kind":"uniform"}})",
       }) {
    const auto s = io::parse_genspec(text);
    const auto dumped = io::genspec_to_json(s);
    CHECK(io::genspec_to_json(io::parse_genspec(dumped)) == dumped);
  }

  CHECK_THROWS_AS(io::parse_genspec(R"({"shape":[8],"function":{"kind":"bogus"}})"), ConfigError);
  CHECK_THROWS_AS(io::parse_genspec(R"({"shape":[],"function":{"kind":"power","a":0.3}})"), ConfigError);
  CHECK_THROWS_AS(io::parse_genspec(R"({"shape":[8],"function":{"kind":"power","a":"x"}})"), ConfigError);
  CHECK_THROWS_AS(io::parse_genspec(R"({"shape":[8],"function":{"kind":"spike","position":-1}})"), ConfigError);
  CHECK_THROWS_AS(io::parse_genspec("nope"), ConfigError);
}

TEST_CASE("sha256") {
  CHECK(io::sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
