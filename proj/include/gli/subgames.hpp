#pragma once

#include "gli/classic_lotto.hpp"
#include "gli/model.hpp"

namespace gli {

/// Attacker's equilibrium payoff in the lower-bounded (favoritism) sub-game,
/// where its allocation is confined to [tau, inf) and averages x1:
///   x1 == tau                                  -> 1 - min(x_b/tau, 1)
///   x_b <= tau, or x1 - tau >= 2(x_b-tau)^2 / (tau + 2(x_b-tau))
///                                              -> 1 - x_b / (x1 + sqrt(x1^2 - tau^2))
///   otherwise                                  -> (x1 - tau) / (2 (x_b - tau))
/// Throws std::domain_error if x1 < tau or tau <= 0.
double pi1(double x1, double x_b, double tau);

/// Attacker's equilibrium payoff in the upper-bounded sub-game, where its
/// allocation is confined to [0, tau] and averages at most x0.
/// Throws std::domain_error if x0 lies outside [0, tau] or tau <= 0.
double pi0(double x0, double x_b, double tau);

/// Equilibrium profile of the upper-bounded sub-game. The integrated payoff
/// of the returned pair equals pi0(x0, x_b, tau). The Attacker's expected
/// allocation never exceeds x0 but may fall short of it: beyond tau/2 extra
/// budget buys nothing.
///
///   x_b >= tau:                 A = atom(0); B = atom(tau).
///   x0 >= tau/2:                A = U[0, tau];
///                               B = atom(0, 1 - x_b/tau) + atom(tau, x_b/tau).
///   x0, x_b <= tau/2:           classic profile gl_strategies(x0, x_b).
///   x0 < tau/2 < x_b < tau:     A = atom(0, 1 - 2 x0/tau) + U([0, tau], 2 x0/tau);
///                               B = U([0, tau], g) + atom(tau, 1 - g),
///                               g = 2 (tau - x_b) / tau.
StrategyProfile g0_strategies(double x0, double x_b, double tau);

}  // namespace gli
