#include "gli/gli_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gli/classic_lotto.hpp"
#include "gli/strategy_eval.hpp"
#include "gli/subgames.hpp"

namespace gli {
namespace {

double sqrt_clamped(double radicand) {
  if (radicand < 0.0 && radicand >= -kIdentityTolerance) return 0.0;
  return std::sqrt(radicand);
}

// Shared square-root form of regions IV, VII and IX.
double favoritism_only(double x_a, double x_b, double tau) {
  return x_b / (x_a + sqrt_clamped(x_a * x_a - tau * tau));
}

}  // namespace

Region classify_region(const GameParams& params) {
  validate(params);
  const double xa = params.x_a;
  const double xb = params.x_b;
  const double tau = params.tau;
  if (tau == 0.0) return Region::Classic;

  const double half = 0.5 * tau;
  const double five_quarters = 1.25 * tau;
  if (xb <= half) {
    if (xa <= xb) return Region::I;
    if (xa <= half) return Region::II;
    if (xa < five_quarters) return Region::III;
    return Region::IV;
  }
  if (xb <= 0.75 * tau) {
    if (xa <= half) return Region::V;
    if (xa < five_quarters) return Region::VI;
    return Region::VII;
  }
  if (xa < std::sqrt(xb * xb + tau * tau)) return Region::VIII;
  return Region::IX;
}

double region_payoff(Region region, const GameParams& p) {
  const double xa = p.x_a;
  const double xb = p.x_b;
  const double tau = p.tau;
  switch (region) {
    case Region::I:
      return xb > 0.0 ? 1.0 - xa / (2.0 * xb) : 1.0;
    case Region::II:
      return xa > 0.0 ? xb / (2.0 * xa) : 1.0;
    case Region::III:
      return xb / tau * (1.0 - (2.0 * xa - tau) / (3.0 * tau));
    case Region::V:
      return 1.0 - 2.0 * xa / tau * (1.0 - xb / tau);
    case Region::VI:
      return 2.0 * xb * (2.0 * tau - xa) / (3.0 * tau * tau);
    case Region::VIII:
      return 1.0 - xa / (xb + std::sqrt(xb * xb + tau * tau));
    case Region::IV:
    case Region::VII:
    case Region::IX:
      return favoritism_only(xa, xb, tau);
    case Region::Classic:
      return gl_payoff(xa, xb);
  }
  throw std::logic_error("unknown region");
}

double gli_payoff(const GameParams& params) {
  return region_payoff(classify_region(params), params);
}

Decomposition optimal_decomposition(const GameParams& params) {
  validate(params);
  const double xa = params.x_a;
  const double xb = params.x_b;
  const double tau = params.tau;
  if (tau == 0.0) throw std::domain_error("tau = 0 is the classic game; no decomposition");

  const double half = 0.5 * tau;
  Decomposition d{0.0, xa, std::nullopt};
  if (xb >= 0.75 * tau) {
    const double x1 = std::max(std::sqrt(xb * xb + tau * tau), xa);
    d = Decomposition{xa / x1, 0.0, x1};
  } else if (xa >= half) {
    const double x1 = std::max(1.25 * tau, xa);
    d = Decomposition{(xa - half) / (x1 - half), half, x1};
  }
  // All mass above the threshold: the lower part carries no weight.
  if (d.alpha >= 1.0) d.x0.reset();
  return d;
}

double decomposition_objective(const GameParams& params, const Decomposition& d) {
  double value = 0.0;
  if (d.alpha < 1.0) value += (1.0 - d.alpha) * pi0(d.x0.value(), params.x_b, params.tau);
  if (d.alpha > 0.0) value += d.alpha * pi1(d.x1.value(), params.x_b, params.tau);
  return value;
}

namespace {

struct Mp2Grid {
  double x1_lo = 0.0;
  double x1_hi = 0.0;
  std::size_t steps = 0;
};

Mp2Grid make_grid(const GameParams& params, double resolution) {
  validate(params);
  if (!(resolution > 0.0)) throw std::domain_error("resolution must be positive");
  if (params.tau == 0.0) throw std::domain_error("mp2_solve requires tau > 0");
  const double steps = std::ceil(1.0 / resolution);
  if (steps > 1e5) throw std::domain_error("resolution too fine");
  const double tau = params.tau;
  const double lo = std::max(tau, params.x_a);
  const double cap =
      3.0 * std::max({tau, params.x_a, std::sqrt(params.x_b * params.x_b + tau * tau)});
  return Mp2Grid{lo, cap, static_cast<std::size_t>(steps)};
}

struct Candidate {
  double value = -1.0;
  double alpha = 0.0;
  double x0 = 0.0;
  double x1 = 0.0;
};

// Best cell of one X1 row; the first maximum in alpha order wins.
Candidate evaluate_row(const GameParams& params, const Mp2Grid& grid, std::size_t row) {
  const double xa = params.x_a;
  const double xb = params.x_b;
  const double tau = params.tau;
  const std::size_t n = grid.steps;
  const double x1 = row == n ? grid.x1_hi
                             : grid.x1_lo + (grid.x1_hi - grid.x1_lo) * static_cast<double>(row) /
                                                static_cast<double>(n);
  const double alpha_hi = std::min(1.0, xa / x1);
  const double alpha_lo = xa > tau ? (xa - tau) / (x1 - tau) : 0.0;
  const double pi1_value = pi1(x1, xb, tau);

  Candidate best;
  for (std::size_t j = 0; j <= n; ++j) {
    const double alpha =
        j == n ? alpha_hi
               : alpha_lo + (alpha_hi - alpha_lo) * static_cast<double>(j) / static_cast<double>(n);
    double value;
    double x0 = 0.0;
    if (alpha >= 1.0) {
      value = pi1_value;
    } else {
      x0 = std::clamp((xa - alpha * x1) / (1.0 - alpha), 0.0, tau);
      value = (1.0 - alpha) * pi0(x0, xb, tau) + alpha * pi1_value;
    }
    if (value > best.value) best = Candidate{value, alpha, x0, x1};
  }
  return best;
}

Mp2Result to_result(const Candidate& c) {
  Decomposition d{c.alpha, std::nullopt, c.x1};
  if (c.alpha < 1.0) d.x0 = c.x0;
  return Mp2Result{c.value, d};
}

}  // namespace

Mp2Result mp2_solve_serial(const GameParams& params, double resolution) {
  const Mp2Grid grid = make_grid(params, resolution);
  Candidate best;
  for (std::size_t row = 0; row <= grid.steps; ++row) {
    const Candidate c = evaluate_row(params, grid, row);
    if (c.value > best.value) best = c;
  }
  return to_result(best);
}

Mp2Result mp2_solve(const GameParams& params, double resolution) {
  const Mp2Grid grid = make_grid(params, resolution);
  std::vector<Candidate> rows(grid.steps + 1);
  const auto count = static_cast<std::ptrdiff_t>(rows.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t row = 0; row < count; ++row)
    rows[static_cast<std::size_t>(row)] = evaluate_row(params, grid, static_cast<std::size_t>(row));

  Candidate best;
  for (const auto& c : rows)
    if (c.value > best.value) best = c;
  return to_result(best);
}

GliSolution solve(const GameParams& params) {
  GliSolution s;
  s.region = classify_region(params);
  s.u_b = region_payoff(s.region, params);
  s.u_a = 1.0 - s.u_b;
  if (s.region == Region::Classic) return s;
  s.decomposition = optimal_decomposition(params);
  if (s.decomposition->alpha < 1.0)
    s.g0_profile = g0_strategies(*s.decomposition->x0, params.x_b, params.tau);
  return s;
}

bool VerificationReport::passed() const {
  return abs_diff <= abs_diff_bound && info_gain >= -kIdentityTolerance;
}

VerificationReport verify_instance(const GameParams& params, double resolution) {
  VerificationReport r;
  r.params = params;
  r.region = classify_region(params);
  r.abs_diff_bound = oracle_bound(resolution);

  if (r.region == Region::Classic) {
    const double u_b = gl_payoff(params.x_a, params.x_b);
    r.closed_form = 1.0 - u_b;
    r.mp2_oracle = r.closed_form;
    r.abs_diff = 0.0;
    r.info_gain = 0.0;
    r.br_slack_g0 = equilibrium_slack(gl_strategies(params.x_a, params.x_b), r.closed_form,
                                      params.x_a, params.x_b);
    return r;
  }

  const double u_b = region_payoff(r.region, params);
  r.closed_form = 1.0 - u_b;
  r.mp2_oracle = mp2_solve(params, resolution).u_a_approx;
  r.abs_diff = std::abs(r.closed_form - r.mp2_oracle);
  r.info_gain = u_b - gl_payoff(params.x_a, params.x_b);

  const Decomposition d = optimal_decomposition(params);
  if (d.alpha < 1.0) {
    const double x0 = *d.x0;
    r.br_slack_g0 = equilibrium_slack(g0_strategies(x0, params.x_b, params.tau),
                                      pi0(x0, params.x_b, params.tau), x0, params.x_b,
                                      params.tau);
  }
  return r;
}

std::vector<VerificationReport> verify_batch_serial(std::span<const GameParams> instances,
                                                    double resolution) {
  std::vector<VerificationReport> out;
  out.reserve(instances.size());
  for (const auto& p : instances) out.push_back(verify_instance(p, resolution));
  return out;
}

std::vector<VerificationReport> verify_batch(std::span<const GameParams> instances,
                                             double resolution) {
  if (!(resolution > 0.0)) throw std::domain_error("resolution must be positive");
  for (const auto& p : instances) validate(p);
  std::vector<VerificationReport> out(instances.size());
  const auto count = static_cast<std::ptrdiff_t>(instances.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        verify_instance(instances[static_cast<std::size_t>(i)], resolution);
  return out;
}

}  // namespace gli
