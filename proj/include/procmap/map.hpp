#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>

namespace procmap {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default bound beyond which a trajectory is declared escaped. Divergent
/// orbits gain at most ~g per step, so any ballistic trajectory reaches this
/// quickly relative to the bound's magnitude.
inline constexpr double kDefaultEscapeBound = 1e12;

struct MapParams {
  double g = 0.0;  // feedback gain, the single control parameter
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct BracketError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One application of the map: a + g*sin(a).
inline double eval(MapParams p, double a) noexcept {
  return a + p.g * std::sin(a);
}

/// Derivative of the map: 1 + g*cos(a).
inline double deriv(MapParams p, double a) noexcept {
  return 1.0 + p.g * std::cos(a);
}

/// Fold a into [0, 2*pi), exact for negative inputs.
inline double mod_two_pi(double a) noexcept {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

struct IterateResult {
  double value = 0.0;
  bool escaped = false;
  std::uint64_t escape_step = 0;  // first step at which |A| exceeded the bound
};

/// n-fold composition of the map. The recurrence is inherently serial.
IterateResult iterate_n(MapParams p, double a, std::uint64_t n,
                        double escape_bound = kDefaultEscapeBound) noexcept;

/// Multiplier of an n-point orbit segment: the chain-rule product of the
/// map's derivative over the given consecutive iterates.
double multiplier_n(MapParams p, std::span<const double> orbit_points) noexcept;

/// The two interior critical points of one sine period.
struct CriticalPair {
  double a1 = 0.0;  // acos(-1/g), in (pi/2, pi)
  double a2 = 0.0;  // 2*pi - a1
};

/// Throws DomainError for g <= 1 (no interior critical point).
CriticalPair critical_points(MapParams p);

}  // namespace procmap
