#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gli/model.hpp"

namespace gli {

/// Parameter cell whose closed form applies. tau == 0 gives Region::Classic.
///
/// Ties on cell boundaries go to the lowest-numbered cell, except where the
/// optimal decomposition puts all of the Attacker's mass above the threshold
/// (X_A = 5 tau / 4 with X_B <= 3 tau / 4, and X_A = sqrt(X_B^2 + tau^2) with
/// X_B >= 3 tau / 4): those points carry the tag of the square-root cell
/// (IV, VII or IX). The payoff is continuous across every boundary, so the
/// tag never changes the value.
Region classify_region(const GameParams& params);

/// Evaluates the closed form of `region` regardless of whether params lie in
/// it. Used to compare neighbouring formulas along boundaries.
double region_payoff(Region region, const GameParams& params);

/// Breaker's equilibrium payoff with a binary threshold sensor.
/// Throws std::invalid_argument on invalid params.
double gli_payoff(const GameParams& params);

/// Optimal split (alpha*, X0*, X1*) of the Attacker's budget.
///   X_B >= 3 tau / 4:            X1 = max(sqrt(X_B^2 + tau^2), X_A), alpha = X_A / X1, X0 = 0
///   X_A >= tau / 2, otherwise:   X1 = max(5 tau / 4, X_A),
///                                alpha = (X_A - tau/2) / (X1 - tau/2), X0 = tau / 2
///   X_A < tau / 2, otherwise:    alpha = 0, X0 = X_A, no X1
/// X0 is omitted when alpha == 1.
/// Throws std::domain_error when tau == 0.
Decomposition optimal_decomposition(const GameParams& params);

/// (1 - alpha) pi0(X0) + alpha pi1(X1), skipping zero-weight parts.
double decomposition_objective(const GameParams& params, const Decomposition& decomposition);

struct Mp2Result {
  double u_a_approx = 0.0;
  Decomposition argmax;
};

/// Grid maximum of the Attacker's decomposition problem
///   max (1 - alpha) pi0(X0) + alpha pi1(X1)
///   s.t. (1 - alpha) X0 + alpha X1 = X_A, X0 in [0, tau], X1 >= tau.
/// X1 runs over [max(tau, X_A), 3 max(tau, X_A, sqrt(X_B^2 + tau^2))] and,
/// for each X1, alpha over the interval keeping X0 inside [0, tau]. Both
/// axes are split into ceil(1 / resolution) equal steps, so resolution is
/// relative to each axis' range.
///
/// Rows are evaluated in parallel with OpenMP; ties resolve to the
/// lexicographically smallest (X1, alpha), so the result is identical to
/// mp2_solve_serial for any thread count.
/// Throws std::domain_error when resolution <= 0 or tau == 0.
Mp2Result mp2_solve(const GameParams& params, double resolution);

/// Single-threaded reference for mp2_solve.
Mp2Result mp2_solve_serial(const GameParams& params, double resolution);

struct GliSolution {
  double u_b = 0.0;
  double u_a = 0.0;
  Region region = Region::Classic;
  std::optional<Decomposition> decomposition;   // absent for Classic
  std::optional<StrategyProfile> g0_profile;    // present when alpha* < 1
};

GliSolution solve(const GameParams& params);

struct VerificationReport {
  GameParams params;
  Region region = Region::Classic;
  double closed_form = 0.0;  // Attacker payoff, 1 - gli_payoff
  double mp2_oracle = 0.0;
  double abs_diff = 0.0;
  double abs_diff_bound = 0.0;  // allowed |closed_form - mp2_oracle|
  double info_gain = 0.0;       // gli_payoff - gl_payoff
  std::optional<double> br_slack_g0;

  bool passed() const;
};

// Oracle agreement bound for a given mp2 resolution.
inline double oracle_bound(double resolution) { return 5.0 * resolution; }

/// Closed form vs. grid oracle vs. best-response slack of the sub-game
/// profile at X0*. For tau == 0 the classic payoff is both closed form and
/// oracle and the slack is that of the classic profile.
VerificationReport verify_instance(const GameParams& params, double resolution);

/// verify_instance over a batch, instances spread across OpenMP threads.
/// Output order matches input order.
std::vector<VerificationReport> verify_batch(std::span<const GameParams> instances,
                                             double resolution);
std::vector<VerificationReport> verify_batch_serial(std::span<const GameParams> instances,
                                                    double resolution);

}  // namespace gli
