#pragma once

#include <cstdint>

#include "gli/model.hpp"

namespace gli {

struct SimulationEstimate {
  double estimate = 0.0;   // Breaker win rate
  double std_error = 0.0;
  std::uint64_t n = 0;
  bool hybrid = false;     // false: plain classic simulation (tau == 0)
  double alpha = 0.0;      // probability of the above-threshold branch
};

/// Monte Carlo estimate of the Breaker's equilibrium payoff.
///
/// With tau > 0 the estimate is hybrid: each round first draws the sensor
/// signal. With probability alpha* the Attacker's allocation lies above tau;
/// that round is credited the analytic value 1 - pi1(X1*) because strategies
/// of the above-threshold sub-game are not constructed. Otherwise x_A and
/// x_B are drawn from the below-threshold sub-game profile at X0* and the
/// round is scored with ties to the Breaker.
///
/// With tau == 0 both allocations are drawn from the classic profile.
/// Deterministic for a given seed. Throws std::invalid_argument if n == 0.
SimulationEstimate simulate(const GameParams& params, std::uint64_t n, std::uint64_t seed);

}  // namespace gli
