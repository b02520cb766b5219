#include <cmath>
#include <random>

#include "doctest.h"
#include "gli/classic_lotto.hpp"
#include "gli/strategy_eval.hpp"
#include "oracles.hpp"

using namespace gli;

TEST_CASE("gl_payoff examples") {
  CHECK(gl_payoff(7.0, 10.0) == doctest::Approx(0.65).epsilon(1e-15));
  CHECK(gl_payoff(10.0, 5.0) == 0.25);
  for (const double c : {1e-6, 0.5, 3.0, 1e6}) CHECK(gl_payoff(c, c) == 0.5);
}

TEST_CASE("gl_payoff zero conventions and errors") {
  CHECK(gl_payoff(0.0, 0.0) == 1.0);
  CHECK(gl_payoff(0.0, 4.0) == 1.0);
  CHECK(gl_payoff(4.0, 0.0) == 0.0);
  CHECK_THROWS_AS(gl_payoff(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(gl_payoff(1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(gl_payoff(1.0, std::nan("")), std::domain_error);
}

TEST_CASE("gl_payoff is monotone and antisymmetric") {
  std::mt19937_64 engine(8);
  std::uniform_real_distribution<double> u(0.01, 20.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(engine);
    const double b = u(engine);
    CHECK(gl_payoff(a, b) + gl_payoff(b, a) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gl_payoff(a, b + 0.1) >= gl_payoff(a, b));
    CHECK(gl_payoff(a + 0.1, b) <= gl_payoff(a, b));
  }
}

TEST_CASE("gl_strategies shape") {
  const auto p = gl_strategies(7.0, 10.0);
  CHECK(p.breaker == MixedStrategy::uniform(0.0, 20.0));
  REQUIRE(p.attacker.atoms.size() == 1);
  CHECK(p.attacker.atoms[0].location == 0.0);
  CHECK(p.attacker.atoms[0].mass == doctest::Approx(0.3).epsilon(1e-15));
  CHECK(p.attacker.segments[0].hi == 20.0);

  const auto z = gl_strategies(0.0, 0.0);
  CHECK(z.attacker == MixedStrategy::point_mass(0.0));
  CHECK(z.breaker == MixedStrategy::point_mass(0.0));
  CHECK(payoff_breaker(z.attacker, z.breaker) == 1.0);
}

TEST_CASE("gl_strategies integrate to the closed form and respect budgets") {
  std::mt19937_64 engine(314);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  for (int i = 0; i < 10'000; ++i) {
    const double a = u(engine);
    const double b = u(engine);
    const auto p = gl_strategies(a, b);
    REQUIRE(std::abs(payoff_breaker(p.attacker, p.breaker) - gl_payoff(a, b)) <= 1e-10);
    REQUIRE(expected_value(p.attacker) <= a + 1e-12);
    REQUIRE(expected_value(p.breaker) <= b + 1e-12);
  }
}

TEST_CASE("gl_strategies agree with Monte Carlo") {
  const auto p = gl_strategies(3.0, 8.0);
  const auto mc = testing::mc_breaker_win_rate(p.attacker, p.breaker, 1'000'000, 12);
  CHECK(std::abs(mc.mean - gl_payoff(3.0, 8.0)) <= 3.0 * mc.std_error);
}

TEST_CASE("gl_strategies form an epsilon-equilibrium") {
  std::mt19937_64 engine(2718);
  std::uniform_real_distribution<double> u(0.01, 20.0);
  for (int i = 0; i < 300; ++i) {
    const double a = u(engine);
    const double b = u(engine);
    const auto p = gl_strategies(a, b);
    const double slack = equilibrium_slack(p, 1.0 - gl_payoff(a, b), a, b);
    REQUIRE(slack <= 1e-3);
  }
}
