#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "gli/json_io.hpp"
#include "gli/model.hpp"
#include "oracles.hpp"

using namespace gli;

TEST_CASE("canonicalize merges duplicate atoms") {
  const MixedStrategy raw{{{0.0, 0.5}, {0.0, 0.5}}, {}};
  const MixedStrategy c = canonicalize(raw);
  REQUIRE(c.atoms.size() == 1);
  CHECK(c.atoms[0].location == 0.0);
  CHECK(c.atoms[0].mass == 1.0);
  CHECK(c.segments.empty());
}

TEST_CASE("canonicalize leaves a valid mixed strategy unchanged") {
  const MixedStrategy raw{{{0.0, 0.3}}, {{0.0, 2.0, 0.7}}};
  const MixedStrategy c = canonicalize(raw);
  CHECK(c == raw);
  CHECK(c.total_mass() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(canonicalize(c) == c);
}

TEST_CASE("canonicalize drops zero mass, sorts, and folds degenerate segments") {
  const MixedStrategy raw{{{3.0, 0.25}, {1.0, 0.0}, {2.0, 0.25}},
                          {{4.0, 5.0, 0.25}, {0.0, 1.0, 0.0}, {6.0, 6.0, 0.25}}};
  const MixedStrategy c = canonicalize(raw);
  REQUIRE(c.atoms.size() == 3);
  CHECK(c.atoms[0].location == 2.0);
  CHECK(c.atoms[1].location == 3.0);
  CHECK(c.atoms[2].location == 6.0);
  REQUIRE(c.segments.size() == 1);
  CHECK(c.segments[0].lo == 4.0);
}

TEST_CASE("canonicalize rejects malformed input") {
  CHECK_THROWS_AS(canonicalize({{{0.0, 0.5}}, {}}), MalformedStrategy);
  CHECK_THROWS_AS(canonicalize({{{0.0, 1.5}, {1.0, -0.5}}, {}}), MalformedStrategy);
  CHECK_THROWS_AS(canonicalize({{{-1.0, 1.0}}, {}}), MalformedStrategy);
  CHECK_THROWS_AS(canonicalize({{}, {{2.0, 1.0, 1.0}}}), MalformedStrategy);
  CHECK_THROWS_AS(canonicalize({{}, {{0.0, 2.0, 0.5}, {1.0, 3.0, 0.5}}}), MalformedStrategy);
  CHECK_THROWS_AS(canonicalize({{{std::nan(""), 1.0}}, {}}), MalformedStrategy);
  // Within the input tolerance.
  CHECK_NOTHROW(canonicalize({{{0.0, 1.0 + 5e-10}}, {}}));
}

TEST_CASE("canonicalize is idempotent and preserves the mean on random strategies") {
  std::mt19937_64 engine(11);
  for (int i = 0; i < 500; ++i) {
    MixedStrategy s = testing::random_strategy(engine);
    // Split pieces to give canonicalize something to merge.
    MixedStrategy raw = s;
    for (const auto& a : s.atoms) {
      raw.atoms.push_back({a.location, a.mass / 2});
      raw.atoms[&a - s.atoms.data()].mass /= 2;
    }
    const MixedStrategy once = canonicalize(raw);
    CHECK(canonicalize(once) == once);
    CHECK(expected_value(once) == doctest::Approx(expected_value(s)).epsilon(1e-12));
  }
}

TEST_CASE("expected_value") {
  CHECK(expected_value(MixedStrategy::uniform(0.0, 2.0)) == 1.0);
  CHECK(expected_value(canonicalize({{{0.0, 0.3}}, {{0.0, 2.0, 0.7}}})) ==
        doctest::Approx(0.7).epsilon(1e-15));
  CHECK(expected_value(MixedStrategy::point_mass(5.0)) == 5.0);
}

TEST_CASE("cdf tie semantics") {
  const auto u = MixedStrategy::uniform(0.0, 2.0);
  CHECK(cdf(u, 1.0, true) == 0.5);
  CHECK(cdf(u, 1.0, false) == 0.5);

  const auto atom = MixedStrategy::point_mass(1.0);
  CHECK(cdf(atom, 1.0, true) == 1.0);
  CHECK(cdf(atom, 1.0, false) == 0.0);

  CHECK(cdf(u, -0.5, true) == 0.0);
  CHECK(cdf(atom, -1e-300, true) == 0.0);
}

TEST_CASE("cdf is nondecreasing, right-continuous, and reaches 1") {
  std::mt19937_64 engine(5);
  for (int i = 0; i < 200; ++i) {
    const MixedStrategy s = testing::random_strategy(engine);
    double prev = 0.0;
    for (int k = -5; k <= 1200; ++k) {
      const double x = 0.01 * k;
      const double v = cdf(s, x, true);
      CHECK(v >= prev - 1e-15);
      CHECK(cdf(s, x, false) <= v + 1e-15);
      CHECK(cdf(s, x + 1e-12, true) - v < 1e-9);
      prev = v;
    }
    CHECK(cdf(s, std::numeric_limits<double>::infinity(), true) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("strategy json layout is fixed") {
  const MixedStrategy s = canonicalize({{{0.0, 0.25}}, {{0.0, 2.0, 0.75}}});
  CHECK(strategy_to_json(s).dump() ==
        R"({"atoms":[{"x":0.0,"m":0.25}],"segments":[{"lo":0.0,"hi":2.0,"m":0.75}]})");
}

TEST_CASE("strategy json round-trips random strategies exactly") {
  std::mt19937_64 engine(3);
  for (int i = 0; i < 200; ++i) {
    const MixedStrategy s = testing::random_strategy(engine);
    const auto text = strategy_to_json(s).dump();
    CHECK(strategy_from_json(Json::parse(text)) == s);
  }
  CHECK_THROWS_AS(strategy_from_json(Json::parse(R"({"atoms":[]})")), MalformedStrategy);
  CHECK_THROWS_AS(strategy_from_json(Json::parse(R"({"atoms":[{"x":1,"m":0.5}],"segments":[]})")),
                  MalformedStrategy);
}

TEST_CASE("game params validation") {
  CHECK_NOTHROW(validate(GameParams{0.0, 0.0, 0.0}));
  CHECK_THROWS_AS(validate(GameParams{-1.0, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(validate(GameParams{1.0, std::numeric_limits<double>::infinity(), 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(validate(GameParams{1.0, 1.0, std::nan("")}), std::invalid_argument);
}

TEST_CASE("decomposition validation and spend") {
  const Decomposition d{1.0 / 6.0, 4.0, 10.0};
  CHECK_NOTHROW(validate(d, 8.0));
  CHECK(d.spend() == doctest::Approx(5.0).epsilon(1e-15));

  CHECK_THROWS(validate(Decomposition{1.5, 1.0, 10.0}, 8.0));
  CHECK_THROWS(validate(Decomposition{0.5, 9.0, 10.0}, 8.0));
  CHECK_THROWS(validate(Decomposition{0.5, 1.0, 7.0}, 8.0));
  CHECK_THROWS(validate(Decomposition{0.5, std::nullopt, 10.0}, 8.0));
  CHECK_NOTHROW(validate(Decomposition{0.0, 2.0, std::nullopt}, 8.0));
  CHECK_NOTHROW(validate(Decomposition{1.0, std::nullopt, 10.0}, 8.0));
}

TEST_CASE("region names") {
  for (int i = 0; i <= static_cast<int>(Region::Classic); ++i) {
    const auto r = static_cast<Region>(i);
    CHECK(region_from_string(to_string(r)) == r);
  }
  CHECK(to_string(Region::VIII) == "VIII");
  CHECK_FALSE(region_from_string("X").has_value());
}

TEST_CASE("sensor signal") {
  CHECK(sensor_signal(13.0, 13.0) == Signal::Below);
  CHECK(sensor_signal(13.0000001, 13.0) == Signal::Above);
  CHECK(sensor_signal(0.0, 0.0) == Signal::Below);
}
