// Test-only oracles. Nothing here calls the library's integration, hull or
// sampling code; it only reads strategies as data.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gli/model.hpp"

namespace gli::testing {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};

// Draws one allocation: a discrete choice over pieces, then a uniform
// position inside a segment.
class PieceSampler {
 public:
  explicit PieceSampler(const MixedStrategy& s) : strategy_(s) {
    std::vector<double> weights;
    for (const auto& a : s.atoms) weights.push_back(a.mass);
    for (const auto& seg : s.segments) weights.push_back(seg.mass);
    pick_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
  }

  template <class Engine>
  double operator()(Engine& engine) {
    const std::size_t k = pick_(engine);
    if (k < strategy_.atoms.size()) return strategy_.atoms[k].location;
    const Segment& seg = strategy_.segments[k - strategy_.atoms.size()];
    return std::uniform_real_distribution<double>(seg.lo, seg.hi)(engine);
  }

 private:
  MixedStrategy strategy_;
  std::discrete_distribution<std::size_t> pick_;
};

// Monte Carlo estimate of P[x_B >= x_A].
inline McEstimate mc_breaker_win_rate(const MixedStrategy& f_a, const MixedStrategy& f_b,
                                      std::uint64_t n, std::uint64_t seed) {
  std::mt19937 engine(static_cast<std::uint32_t>(seed));
  PieceSampler draw_a(f_a);
  PieceSampler draw_b(f_b);
  std::uint64_t wins = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x_a = draw_a(engine);
    const double x_b = draw_b(engine);
    if (x_b >= x_a) ++wins;
  }
  const double p = static_cast<double>(wins) / static_cast<double>(n);
  return {p, std::sqrt(std::max(p * (1.0 - p), 1e-300) / static_cast<double>(n))};
}

// Direct pure-bid win probability from the piece list.
inline double brute_win_prob(const MixedStrategy& opp, double bid, bool breaker) {
  double p = 0.0;
  for (const auto& a : opp.atoms)
    if (breaker ? a.location <= bid : a.location < bid) p += a.mass;
  for (const auto& s : opp.segments) {
    if (bid >= s.hi)
      p += s.mass;
    else if (bid > s.lo)
      p += s.mass * (bid - s.lo) / (s.hi - s.lo);
  }
  return p;
}

// Best mixture of at most two bids from `bids` whose mean is at most
// `budget`, by enumerating every pair. O(n^2).
inline double brute_two_point_value(const std::vector<double>& bids,
                                    const std::vector<double>& values, double budget) {
  double best = 0.0;
  const std::size_t n = bids.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (bids[i] <= budget) best = std::max(best, values[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double lo = std::min(bids[i], bids[j]);
      const double hi = std::max(bids[i], bids[j]);
      if (!(lo <= budget && budget < hi)) continue;
      const double v_lo = bids[i] < bids[j] ? values[i] : values[j];
      const double v_hi = bids[i] < bids[j] ? values[j] : values[i];
      const double w = (budget - lo) / (hi - lo);
      best = std::max(best, (1.0 - w) * v_lo + w * v_hi);
    }
  }
  return best;
}

// Random canonical strategy: up to 3 atoms and up to 2 disjoint segments on
// [0, scale].
template <class Engine>
MixedStrategy random_strategy(Engine& engine, double scale = 10.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count_atoms(0, 3);
  std::uniform_int_distribution<int> count_segments(0, 2);
  int atoms = count_atoms(engine);
  const int segments = count_segments(engine);
  if (atoms + segments == 0) atoms = 1;

  MixedStrategy s;
  std::vector<double> cuts;
  for (int i = 0; i < 2 * segments; ++i) cuts.push_back(scale * u(engine));
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (int i = 0; i < segments; ++i) {
    const double lo = cuts[2 * i];
    const double hi = cuts[2 * i + 1];
    if (hi <= lo) continue;
    const double m = 0.05 + u(engine);
    s.segments.push_back({lo, hi, m});
    total += m;
  }
  for (int i = 0; i < atoms; ++i) {
    // Snap half of the atoms to a coarse lattice so ties actually occur.
    double x = scale * u(engine);
    if (u(engine) < 0.5) x = std::round(x);
    const double m = 0.05 + u(engine);
    s.atoms.push_back({x, m});
    total += m;
  }
  if (s.atoms.empty() && s.segments.empty()) {
    s.atoms.push_back({0.0, 1.0});
    total = 1.0;
  }
  for (auto& a : s.atoms) a.mass /= total;
  for (auto& seg : s.segments) seg.mass /= total;
  return canonicalize(std::move(s));
}

}  // namespace gli::testing
