#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gli {

// Acceptance tolerance on total mass for caller-supplied strategies.
inline constexpr double kMassInputTolerance = 1e-9;
// Tolerance for identities that only accumulate float rounding.
inline constexpr double kIdentityTolerance = 1e-12;

/// Budgets and sensor threshold of one game instance. All fields are in the
/// same resource units.
struct GameParams {
  double x_a = 0.0;  // Attacker budget
  double x_b = 0.0;  // Breaker budget
  double tau = 0.0;  // sensor threshold
};

// Throws std::invalid_argument unless every field is finite and nonnegative.
void validate(const GameParams& params);

struct Atom {
  double location = 0.0;
  double mass = 0.0;

  bool operator==(const Atom&) const = default;
};

/// Uniform mass spread over [lo, hi].
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;

  double density() const { return mass / (hi - lo); }
  bool operator==(const Segment&) const = default;
};

/// A distribution over nonnegative allocations made of point masses and
/// uniform pieces. Every equilibrium strategy handled by this library has
/// this form.
///
/// The canonical form (see canonicalize) has atoms sorted by location with
/// no duplicates, segments sorted by lo with disjoint interiors, no
/// zero-mass pieces, and total mass 1.
struct MixedStrategy {
  std::vector<Atom> atoms;
  std::vector<Segment> segments;

  static MixedStrategy point_mass(double location);
  static MixedStrategy uniform(double lo, double hi);

  double total_mass() const;
  // Largest value in the support; 0 for an empty strategy.
  double support_top() const;

  bool operator==(const MixedStrategy&) const = default;
};

class MalformedStrategy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Merges duplicate atoms, drops zero-mass pieces, folds degenerate segments
/// (lo == hi) into atoms, sorts, and checks normalization. Idempotent.
/// Throws MalformedStrategy on negative masses or locations, inverted or
/// partially overlapping segments, or total mass off 1 by more than
/// kMassInputTolerance.
MixedStrategy canonicalize(MixedStrategy strategy);

double expected_value(const MixedStrategy& strategy);

/// P[X <= x] when include_atom_at_x is set, else the left limit P[X < x].
double cdf(const MixedStrategy& strategy, double x, bool include_atom_at_x);

enum class Region : std::uint8_t { I, II, III, IV, V, VI, VII, VIII, IX, Classic };

std::string_view to_string(Region region);
std::optional<Region> region_from_string(std::string_view text);

/// Split of the Attacker budget between the below-threshold and
/// above-threshold parts of its strategy: with probability 1 - alpha the
/// realized allocation is at most tau and averages x0, otherwise it is above
/// tau and averages x1.
struct Decomposition {
  double alpha = 0.0;
  std::optional<double> x0;
  std::optional<double> x1;

  // (1 - alpha) * x0 + alpha * x1, absent parts contributing nothing.
  double spend() const;
};

// Throws std::invalid_argument if alpha, x0 or x1 violate their ranges for
// the given threshold, or a part with positive weight is absent.
void validate(const Decomposition& decomposition, double tau);

/// Strategy pair of a two-player Lotto game.
struct StrategyProfile {
  MixedStrategy attacker;
  MixedStrategy breaker;
};

enum class Signal : std::uint8_t { Below = 0, Above = 1 };

inline Signal sensor_signal(double allocation, double tau) {
  return allocation <= tau ? Signal::Below : Signal::Above;
}

}  // namespace gli
