#pragma once

#include <cstddef>
#include <vector>

#include "procmap/map.hpp"

namespace procmap {

enum class Stability { Stable, Unstable, Neutral };

struct FixedPointRecord {
  double a = 0.0;          // root of f^n(A) - A
  int n = 1;               // iterate order
  double multiplier = 0.0; // (f^n)'(a)
  Stability stability = Stability::Neutral;
};

struct StabilityOptions {
  double root_tol = 1e-12;
  double dedup_tol = 1e-8;
  double neutral_band = 1e-9;
  std::size_t grid = 0;  // 0: 8192 for n <= 4, doubled per doubling of n
};

std::size_t default_root_grid(int n) noexcept;

/// Bracket sign changes of f^n(A) - A on a uniform grid over [lo, hi) and
/// bisect each to a root. Tangent (non-crossing) roots can be missed; the
/// grid density is the mitigation.
std::vector<FixedPointRecord> find_fixed_points(MapParams p, int n, double lo,
                                                double hi,
                                                const StabilityOptions& opt = {});

struct StabilitySweep {
  int n = 1;
  std::vector<double> g_grid;
  std::vector<std::vector<FixedPointRecord>> records;  // aligned with g_grid
};

StabilitySweep sweep_stability(int n, double g_lo, double g_hi,
                               std::size_t steps, double lo, double hi,
                               const StabilityOptions& opt = {},
                               unsigned threads = 1);

/// Bisect on g for the point where the stable-root count of f^n on [lo, hi)
/// changes. Throws BracketError when the count is equal at both ends.
double locate_stability_boundary(int n, double g_lo, double g_hi, double lo,
                                 double hi, double boundary_tol = 1e-6,
                                 const StabilityOptions& opt = {});

}  // namespace procmap
