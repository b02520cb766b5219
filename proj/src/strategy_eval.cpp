#include "gli/strategy_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gli {
namespace {

// Antiderivative of the CDF of a unit-mass uniform on [lo, hi].
double uniform_cdf_integral(double lo, double hi, double x) {
  if (x <= lo) return 0.0;
  if (x >= hi) return 0.5 * (hi - lo) + (x - hi);
  const double d = x - lo;
  return d * d / (2.0 * (hi - lo));
}

// Integral of F_B over [lo, hi].
double cdf_integral(const MixedStrategy& f, double lo, double hi) {
  double total = 0.0;
  for (const auto& a : f.atoms) {
    const double from = std::max(lo, a.location);
    if (from < hi) total += a.mass * (hi - from);
  }
  for (const auto& s : f.segments)
    total += s.mass * (uniform_cdf_integral(s.lo, s.hi, hi) - uniform_cdf_integral(s.lo, s.hi, lo));
  return total;
}

}  // namespace

double payoff_breaker(const MixedStrategy& f_a, const MixedStrategy& f_b) {
  double u = 0.0;
  for (const auto& a : f_a.atoms) u += a.mass * (1.0 - cdf(f_b, a.location, false));
  for (const auto& s : f_a.segments) {
    const double width = s.hi - s.lo;
    u += s.mass * (1.0 - cdf_integral(f_b, s.lo, s.hi) / width);
  }
  return std::clamp(u, 0.0, 1.0);
}

double win_prob_pure(const MixedStrategy& f_opp, double bid, Perspective perspective) {
  return cdf(f_opp, bid, perspective == Perspective::Breaker);
}

OracleGrid default_oracle_grid(const MixedStrategy& f_opp) {
  const double top = f_opp.support_top();
  const double scale = top > 0.0 ? top : 1.0;
  const double step = scale / 1e4;
  return OracleGrid{step, top + 2.0 * step};
}

BestResponseReport best_response_value(const MixedStrategy& f_opp, double budget,
                                       Perspective perspective, double grid_step,
                                       double grid_max, std::optional<double> bid_cap) {
  if (!(grid_step > 0.0)) throw std::domain_error("grid_step must be positive");
  if (!(grid_max > f_opp.support_top()))
    throw std::domain_error("grid_max must lie strictly above the opponent's support");
  if (!(budget >= 0.0)) throw std::domain_error("budget must be nonnegative");
  if (bid_cap && !(*bid_cap >= 0.0)) throw std::domain_error("bid cap must be nonnegative");

  const double limit = bid_cap ? std::min(*bid_cap, grid_max) : grid_max;
  const double cells = std::floor(limit / grid_step);
  if (cells > 1e8) throw std::domain_error("oracle grid too fine");

  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(cells) + 2 + 2 * f_opp.segments.size() + f_opp.atoms.size());
  for (std::size_t i = 0; i <= static_cast<std::size_t>(cells); ++i) {
    // i * step can round past the limit; a bid above the cap is not allowed.
    const double x = static_cast<double>(i) * grid_step;
    if (x <= limit) xs.push_back(x);
  }
  xs.push_back(limit);
  for (const auto& a : f_opp.atoms)
    if (a.location <= limit) xs.push_back(a.location);
  for (const auto& s : f_opp.segments) {
    if (s.lo <= limit) xs.push_back(s.lo);
    if (s.hi <= limit) xs.push_back(s.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  struct Point {
    double x, y;
  };
  std::vector<Point> hull;
  hull.reserve(xs.size());
  for (double x : xs) {
    const Point p{x, win_prob_pure(f_opp, x, perspective)};
    while (hull.size() >= 2) {
      const Point& o = hull[hull.size() - 2];
      const Point& a = hull.back();
      const double cross = (a.x - o.x) * (p.y - o.y) - (a.y - o.y) * (p.x - o.x);
      if (cross < 0.0) break;
      hull.pop_back();
    }
    hull.push_back(p);
  }

  BestResponseReport report;
  report.envelope_grid_step = grid_step;

  // First hull vertex reaching the maximum; the envelope is flat beyond it.
  std::size_t peak = 0;
  for (std::size_t i = 1; i < hull.size(); ++i)
    if (hull[i].y > hull[peak].y) peak = i;
  if (budget >= hull[peak].x) {
    report.value = hull[peak].y;
    report.support_bids = {hull[peak].x};
    return report;
  }
  auto upper = std::upper_bound(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(peak) + 1,
                                budget, [](double b, const Point& p) { return b < p.x; });
  const Point& right = *upper;
  const Point& left = *(upper - 1);
  if (budget == left.x) {
    report.value = left.y;
    report.support_bids = {left.x};
  } else {
    const double w = (budget - left.x) / (right.x - left.x);
    report.value = (1.0 - w) * left.y + w * right.y;
    report.support_bids = {left.x, right.x};
  }
  return report;
}

BestResponseReport best_response_value(const MixedStrategy& f_opp, double budget,
                                       Perspective perspective, std::optional<double> bid_cap) {
  const OracleGrid grid = default_oracle_grid(f_opp);
  return best_response_value(f_opp, budget, perspective, grid.step, grid.max, bid_cap);
}

double sample(const MixedStrategy& strategy, Rng& rng) {
  const double u = uniform01(rng);
  double cumulative = 0.0;
  for (const auto& a : strategy.atoms) {
    cumulative += a.mass;
    if (u < cumulative) return a.location;
  }
  for (const auto& s : strategy.segments) {
    const double before = cumulative;
    cumulative += s.mass;
    if (u < cumulative) {
      const double v = (u - before) / s.mass;
      return s.lo + v * (s.hi - s.lo);
    }
  }
  // Rounding left u above the accumulated mass.
  if (!strategy.segments.empty()) return strategy.segments.back().hi;
  if (!strategy.atoms.empty()) return strategy.atoms.back().location;
  throw std::invalid_argument("cannot sample an empty strategy");
}

}  // namespace gli

namespace gli {

double equilibrium_slack(const StrategyProfile& profile, double attacker_value,
                         double attacker_budget, double breaker_budget,
                         std::optional<double> attacker_bid_cap) {
  const double attacker_gain =
      best_response_value(profile.breaker, attacker_budget, Perspective::Attacker,
                          attacker_bid_cap)
          .value -
      attacker_value;
  const double breaker_gain =
      best_response_value(profile.attacker, breaker_budget, Perspective::Breaker).value -
      (1.0 - attacker_value);
  return std::max(attacker_gain, breaker_gain);
}

}  // namespace gli
