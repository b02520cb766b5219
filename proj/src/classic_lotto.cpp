#include "gli/classic_lotto.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gli {
namespace {

void check_budgets(double x_a, double x_b) {
  if (!std::isfinite(x_a) || !std::isfinite(x_b) || x_a < 0.0 || x_b < 0.0)
    throw std::domain_error("budgets must be finite and nonnegative");
}

}  // namespace

double gl_payoff(double x_a, double x_b) {
  check_budgets(x_a, x_b);
  if (x_a == 0.0) return 1.0;
  if (x_b < x_a) return x_b / (2.0 * x_a);
  return 1.0 - x_a / (2.0 * x_b);
}

StrategyProfile gl_strategies(double x_a, double x_b) {
  check_budgets(x_a, x_b);
  if (x_a == 0.0 && x_b == 0.0)
    return {MixedStrategy::point_mass(0.0), MixedStrategy::point_mass(0.0)};

  const double strong = std::max(x_a, x_b);
  const double weak = std::min(x_a, x_b);
  const double share = weak / strong;

  MixedStrategy stronger = MixedStrategy::uniform(0.0, 2.0 * strong);
  MixedStrategy weaker =
      canonicalize({{Atom{0.0, 1.0 - share}}, {Segment{0.0, 2.0 * strong, share}}});
  if (x_a >= x_b) return {std::move(stronger), std::move(weaker)};
  return {std::move(weaker), std::move(stronger)};
}

}  // namespace gli
