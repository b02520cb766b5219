#include "gli/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "gli/classic_lotto.hpp"
#include "gli/gli_core.hpp"
#include "gli/strategy_eval.hpp"
#include "gli/subgames.hpp"

namespace gli {
namespace {

// Running mean and variance (Welford).
class Accumulator {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  double mean() const { return mean_; }
  double std_error() const {
    if (count_ < 2) return 0.0;
    const double variance = m2_ / static_cast<double>(count_ - 1);
    return std::sqrt(variance / static_cast<double>(count_));
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

SimulationEstimate simulate(const GameParams& params, std::uint64_t n, std::uint64_t seed) {
  validate(params);
  if (n == 0) throw std::invalid_argument("n must be at least 1");

  Rng rng(seed);
  Accumulator acc;
  SimulationEstimate out;
  out.n = n;

  if (params.tau == 0.0) {
    const StrategyProfile profile = gl_strategies(params.x_a, params.x_b);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double x_a = sample(profile.attacker, rng);
      const double x_b = sample(profile.breaker, rng);
      acc.add(x_b >= x_a ? 1.0 : 0.0);
    }
    out.estimate = acc.mean();
    out.std_error = acc.std_error();
    return out;
  }

  const Decomposition d = optimal_decomposition(params);
  out.hybrid = true;
  out.alpha = d.alpha;
  const double above_credit = d.alpha > 0.0 ? 1.0 - pi1(*d.x1, params.x_b, params.tau) : 0.0;
  std::optional<StrategyProfile> below;
  if (d.alpha < 1.0) below = g0_strategies(*d.x0, params.x_b, params.tau);

  for (std::uint64_t i = 0; i < n; ++i) {
    if (uniform01(rng) < d.alpha) {
      acc.add(above_credit);
      continue;
    }
    const double x_a = sample(below->attacker, rng);
    if (sensor_signal(x_a, params.tau) != Signal::Below)
      throw std::logic_error("below-threshold profile drew above tau");
    const double x_b = sample(below->breaker, rng);
    acc.add(x_b >= x_a ? 1.0 : 0.0);
  }
  out.estimate = acc.mean();
  out.std_error = acc.std_error();
  return out;
}

}  // namespace gli
