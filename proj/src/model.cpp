#include "gli/model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace gli {

void validate(const GameParams& params) {
  auto check = [](double value, const char* name) {
    if (!std::isfinite(value) || value < 0.0)
      throw std::invalid_argument(std::string(name) + " must be finite and nonnegative");
  };
  check(params.x_a, "x_a");
  check(params.x_b, "x_b");
  check(params.tau, "tau");
}

MixedStrategy MixedStrategy::point_mass(double location) {
  return MixedStrategy{{Atom{location, 1.0}}, {}};
}

MixedStrategy MixedStrategy::uniform(double lo, double hi) {
  return MixedStrategy{{}, {Segment{lo, hi, 1.0}}};
}

double MixedStrategy::total_mass() const {
  double total = 0.0;
  for (const auto& a : atoms) total += a.mass;
  for (const auto& s : segments) total += s.mass;
  return total;
}

double MixedStrategy::support_top() const {
  double top = 0.0;
  for (const auto& a : atoms) top = std::max(top, a.location);
  for (const auto& s : segments) top = std::max(top, s.hi);
  return top;
}

MixedStrategy canonicalize(MixedStrategy strategy) {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;

  for (const auto& a : strategy.atoms) {
    if (!std::isfinite(a.location) || a.location < 0.0)
      throw MalformedStrategy("atom location must be finite and nonnegative");
    if (!std::isfinite(a.mass) || a.mass < 0.0)
      throw MalformedStrategy("atom mass must be finite and nonnegative");
    if (a.mass > 0.0) atoms.push_back(a);
  }
  for (const auto& s : strategy.segments) {
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || s.lo < 0.0)
      throw MalformedStrategy("segment bounds must be finite with lo >= 0");
    if (s.hi < s.lo) throw MalformedStrategy("segment has hi < lo");
    if (!std::isfinite(s.mass) || s.mass < 0.0)
      throw MalformedStrategy("segment mass must be finite and nonnegative");
    if (s.mass == 0.0) continue;
    if (s.hi == s.lo)
      atoms.push_back(Atom{s.lo, s.mass});
    else
      segments.push_back(s);
  }

  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) { return l.location < r.location; });
  std::vector<Atom> merged_atoms;
  for (const auto& a : atoms) {
    if (!merged_atoms.empty() && merged_atoms.back().location == a.location)
      merged_atoms.back().mass += a.mass;
    else
      merged_atoms.push_back(a);
  }

  std::stable_sort(segments.begin(), segments.end(), [](const Segment& l, const Segment& r) {
    return l.lo < r.lo || (l.lo == r.lo && l.hi < r.hi);
  });
  std::vector<Segment> merged_segments;
  for (const auto& s : segments) {
    if (!merged_segments.empty()) {
      auto& prev = merged_segments.back();
      if (prev.lo == s.lo && prev.hi == s.hi) {
        prev.mass += s.mass;
        continue;
      }
      if (s.lo < prev.hi) throw MalformedStrategy("segments overlap");
    }
    merged_segments.push_back(s);
  }

  MixedStrategy out{std::move(merged_atoms), std::move(merged_segments)};
  const double total = out.total_mass();
  if (std::abs(total - 1.0) > kMassInputTolerance)
    throw MalformedStrategy("total mass " + std::to_string(total) + " is not 1");
  return out;
}

double expected_value(const MixedStrategy& strategy) {
  double mean = 0.0;
  for (const auto& a : strategy.atoms) mean += a.mass * a.location;
  for (const auto& s : strategy.segments) mean += s.mass * 0.5 * (s.lo + s.hi);
  return mean;
}

double cdf(const MixedStrategy& strategy, double x, bool include_atom_at_x) {
  if (x < 0.0) return 0.0;
  double p = 0.0;
  for (const auto& a : strategy.atoms) {
    if (a.location < x || (include_atom_at_x && a.location == x)) p += a.mass;
  }
  for (const auto& s : strategy.segments) {
    if (x >= s.hi)
      p += s.mass;
    else if (x > s.lo)
      p += s.mass * (x - s.lo) / (s.hi - s.lo);
  }
  return std::min(p, 1.0);
}

namespace {
constexpr std::array<std::string_view, 10> kRegionNames = {
    "I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX", "Classic"};
}

std::string_view to_string(Region region) {
  return kRegionNames[static_cast<std::size_t>(region)];
}

std::optional<Region> region_from_string(std::string_view text) {
  for (std::size_t i = 0; i < kRegionNames.size(); ++i)
    if (kRegionNames[i] == text) return static_cast<Region>(i);
  return std::nullopt;
}

double Decomposition::spend() const {
  double total = 0.0;
  if (x0 && alpha < 1.0) total += (1.0 - alpha) * *x0;
  if (x1 && alpha > 0.0) total += alpha * *x1;
  return total;
}

void validate(const Decomposition& d, double tau) {
  if (!(d.alpha >= 0.0 && d.alpha <= 1.0))
    throw std::invalid_argument("alpha must lie in [0, 1]");
  if (d.x0 && !(*d.x0 >= 0.0 && *d.x0 <= tau))
    throw std::invalid_argument("x0 must lie in [0, tau]");
  if (d.x1 && !(*d.x1 >= tau)) throw std::invalid_argument("x1 must be at least tau");
  if (!d.x0 && d.alpha < 1.0)
    throw std::invalid_argument("x0 is required when alpha < 1");
  if (!d.x1 && d.alpha > 0.0)
    throw std::invalid_argument("x1 is required when alpha > 0");
}

}  // namespace gli
