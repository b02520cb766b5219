#include "gli/subgames.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gli {
namespace {

void check_common(double x_b, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::domain_error("tau must be positive");
  if (!(x_b >= 0.0) || !std::isfinite(x_b)) throw std::domain_error("x_b must be nonnegative");
}

void check_x0(double x0, double tau) {
  if (!(x0 >= 0.0 && x0 <= tau)) throw std::domain_error("x0 must lie in [0, tau]");
}

}  // namespace

double pi1(double x1, double x_b, double tau) {
  check_common(x_b, tau);
  if (!(x1 >= tau) || !std::isfinite(x1)) throw std::domain_error("x1 must be at least tau");
  if (x1 == tau) return 1.0 - std::min(x_b / tau, 1.0);

  const double head = x1 - tau;
  const double excess = x_b - tau;
  if (excess <= 0.0 || head >= 2.0 * excess * excess / (tau + 2.0 * excess))
    return 1.0 - x_b / (x1 + std::sqrt(x1 * x1 - tau * tau));
  return head / (2.0 * excess);
}

double pi0(double x0, double x_b, double tau) {
  check_common(x_b, tau);
  check_x0(x0, tau);
  const double half = 0.5 * tau;
  if (x_b > tau) return 0.0;
  if (x_b >= half) {
    if (x0 <= half) return 2.0 * x0 / tau * (1.0 - x_b / tau);
    return 1.0 - x_b / tau;
  }
  if (x0 <= x_b) return x_b > 0.0 ? x0 / (2.0 * x_b) : 0.0;
  if (x0 <= half) return 1.0 - x_b / (2.0 * x0);
  return 1.0 - x_b / tau;
}

StrategyProfile g0_strategies(double x0, double x_b, double tau) {
  check_common(x_b, tau);
  check_x0(x0, tau);
  const double half = 0.5 * tau;

  if (x_b >= tau) return {MixedStrategy::point_mass(0.0), MixedStrategy::point_mass(tau)};

  if (x0 >= half) {
    const double high = x_b / tau;
    return {MixedStrategy::uniform(0.0, tau),
            canonicalize({{Atom{0.0, 1.0 - high}, Atom{tau, high}}, {}})};
  }

  if (x_b <= half) return gl_strategies(x0, x_b);

  const double spread = 2.0 * x0 / tau;
  const double gamma = 2.0 * (tau - x_b) / tau;
  return {canonicalize({{Atom{0.0, 1.0 - spread}}, {Segment{0.0, tau, spread}}}),
          canonicalize({{Atom{tau, 1.0 - gamma}}, {Segment{0.0, tau, gamma}}})};
}

}  // namespace gli
