#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gli/model.hpp"

namespace gli {

enum class Perspective { Attacker, Breaker };

/// Exact P[x_B >= x_A] for independent draws; ties go to the Breaker.
double payoff_breaker(const MixedStrategy& f_a, const MixedStrategy& f_b);

inline double payoff_attacker(const MixedStrategy& f_a, const MixedStrategy& f_b) {
  return 1.0 - payoff_breaker(f_a, f_b);
}

/// Probability that a pure bid beats f_opp from the given side. The Breaker
/// wins ties, so an opponent atom at `bid` counts for the Breaker and
/// against the Attacker.
double win_prob_pure(const MixedStrategy& f_opp, double bid, Perspective perspective);

struct BestResponseReport {
  double value = 0.0;
  std::vector<double> support_bids;  // at most two grid bids
  double envelope_grid_step = 0.0;
};

struct OracleGrid {
  double step = 0.0;
  double max = 0.0;
};

// step = support_top / 1e4 and max a few steps above the support.
OracleGrid default_oracle_grid(const MixedStrategy& f_opp);

/// Value of the best reply to f_opp under an expected-budget constraint.
///
/// The reply value is the upper concave envelope of the pure-bid win curve
/// g(x) = win_prob_pure(f_opp, x, perspective) at x = budget, attained by
/// mixing at most two bids. g is sampled on a uniform grid over
/// [0, grid_max] with f_opp's breakpoints inserted; the hull is built with a
/// monotone chain. Bids are further restricted to [0, *bid_cap] when a cap
/// is given (sub-games where the Attacker's support is bounded by tau).
///
/// Throws std::domain_error when grid_step <= 0, grid_max does not lie
/// strictly above f_opp's support, or budget < 0.
BestResponseReport best_response_value(const MixedStrategy& f_opp, double budget,
                                       Perspective perspective, double grid_step,
                                       double grid_max,
                                       std::optional<double> bid_cap = std::nullopt);

BestResponseReport best_response_value(const MixedStrategy& f_opp, double budget,
                                       Perspective perspective,
                                       std::optional<double> bid_cap = std::nullopt);

// 64-bit Mersenne Twister; uniform01 takes the top 53 bits so draws are
// identical on every platform for a given seed.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// One draw by inverse CDF: pick a piece from the cumulative mass table,
/// then place the draw inside it.
double sample(const MixedStrategy& strategy, Rng& rng);

}  // namespace gli

namespace gli {

/// Largest gain either side can obtain by deviating from `profile` against
/// the concave-envelope oracle: the Attacker replying to profile.breaker with
/// budget attacker_budget (bids capped at attacker_bid_cap if given), and the
/// Breaker replying to profile.attacker with budget breaker_budget.
/// attacker_value is the Attacker's claimed equilibrium payoff.
double equilibrium_slack(const StrategyProfile& profile, double attacker_value,
                         double attacker_budget, double breaker_budget,
                         std::optional<double> attacker_bid_cap = std::nullopt);

}  // namespace gli
