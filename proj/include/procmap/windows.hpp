#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "procmap/map.hpp"

namespace procmap {

enum class CriticalBranch { A1, A2 };

struct WindowPredicateSpec {
  int stride = 1;      // L: iterate step between checks
  int half_index = 1;  // I: odd iterates must exceed (2I+1)*pi
  int n_max = 20;      // number of checks
  CriticalBranch branch = CriticalBranch::A1;
};

/// True iff for all n in 1..n_max: f^{L*n}(A*) > (2I+1)*pi when n is odd and
/// f^{L*n}(A*) < pi when n is even. Requires g > 1.
bool window_predicate(MapParams p, const WindowPredicateSpec& spec);

struct WindowInterval {
  double g_lo = 0.0;
  double g_hi = 0.0;
  WindowPredicateSpec spec;
  bool truncated_lo = false;  // run touched the scan boundary
  bool truncated_hi = false;
};

/// Default predicate-scan density: grid points per unit of g. The smallest
/// known window spans ~0.009 in g, so this puts >100 points inside it.
inline constexpr double kWindowGridPerUnit = 20000.0;

/// Evaluate the predicate on a uniform g grid over [g_lo, g_hi], extract
/// maximal true-runs, and bisect each boundary to boundary_tol in g.
/// grid = 0 uses kWindowGridPerUnit points per unit of g.
std::vector<WindowInterval> find_windows(const WindowPredicateSpec& spec,
                                         double g_lo, double g_hi,
                                         std::size_t grid = 0,
                                         double boundary_tol = 1e-6,
                                         unsigned threads = 1);

struct QCurve {
  int n = 1;
  CriticalBranch branch = CriticalBranch::A1;
  std::vector<double> g;
  std::vector<double> values;  // f^n(A*) mod 2*pi, aligned with g
};

QCurve q_curve(int n, CriticalBranch branch, std::span<const double> g_grid);

}  // namespace procmap
