#pragma once

#include "gli/model.hpp"

namespace gli {

/// Breaker's equilibrium payoff in the classic General Lotto game:
/// X_B / (2 X_A) if X_B < X_A, else 1 - X_A / (2 X_B).
/// A zero Attacker budget gives 1 (ties at 0 go to the Breaker).
/// Throws std::domain_error on a negative or non-finite budget.
double gl_payoff(double x_a, double x_b);

/// Equilibrium profile of the classic game. The stronger player is uniform
/// on [0, 2s] with s the larger budget; the weaker one puts 1 - w/s on 0 and
/// spreads w/s uniformly over the same interval. Both budgets zero yields
/// point masses at 0.
StrategyProfile gl_strategies(double x_a, double x_b);

}  // namespace gli
