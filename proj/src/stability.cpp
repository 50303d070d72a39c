#include "procmap/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "procmap/bisect.hpp"
#include "procmap/parallel.hpp"

namespace procmap {

std::size_t default_root_grid(int n) noexcept {
  // f^n oscillates faster with n; double the grid per doubling of n past 4
  std::size_t grid = 8192;
  for (int m = 4; m < n; m *= 2) grid *= 2;
  return grid;
}

namespace {

double iterate_plain(MapParams p, double a, int n) {
  for (int i = 0; i < n; ++i) a = eval(p, a);
  return a;
}

FixedPointRecord make_record(MapParams p, double a, int n,
                             const StabilityOptions& opt) {
  FixedPointRecord r;
  r.a = a;
  r.n = n;
  double m = 1.0;
  double x = a;
  for (int i = 0; i < n; ++i) {
    m *= deriv(p, x);
    x = eval(p, x);
  }
  r.multiplier = m;
  double mag = std::abs(m);
  if (mag < 1.0 - opt.neutral_band)
    r.stability = Stability::Stable;
  else if (mag > 1.0 + opt.neutral_band)
    r.stability = Stability::Unstable;
  else
    r.stability = Stability::Neutral;
  return r;
}

}  // namespace

std::vector<FixedPointRecord> find_fixed_points(MapParams p, int n, double lo,
                                                double hi,
                                                const StabilityOptions& opt) {
  if (n < 1) throw std::invalid_argument("find_fixed_points: n >= 1");
  if (!(lo < hi)) throw std::invalid_argument("find_fixed_points: lo < hi");
  const std::size_t grid = opt.grid ? opt.grid : default_root_grid(n);
  auto h = [&](double a) { return iterate_plain(p, a, n) - a; };

  std::vector<double> roots;
  double prev_x = lo;
  double prev_f = h(lo);
  if (prev_f == 0.0) roots.push_back(lo);
  for (std::size_t i = 1; i <= grid; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid);
    double f = h(x);
    if (f == 0.0) {
      if (x < hi) roots.push_back(x);  // half-open interval
    } else if (prev_f != 0.0 && (prev_f < 0.0) != (f < 0.0)) {
      roots.push_back(bisect_root(h, prev_x, x, opt.root_tol));
    }
    prev_x = x;
    prev_f = f;
  }
  std::sort(roots.begin(), roots.end());
  std::vector<FixedPointRecord> out;
  for (double r : roots) {
    if (!out.empty() && r - out.back().a <= opt.dedup_tol) continue;
    out.push_back(make_record(p, r, n, opt));
  }
  return out;
}

StabilitySweep sweep_stability(int n, double g_lo, double g_hi,
                               std::size_t steps, double lo, double hi,
                               const StabilityOptions& opt, unsigned threads) {
  if (!(g_lo < g_hi)) throw std::invalid_argument("sweep_stability: g_lo < g_hi");
  if (steps < 2) throw std::invalid_argument("sweep_stability: steps >= 2");
  StabilitySweep sweep;
  sweep.n = n;
  sweep.g_grid.resize(steps);
  sweep.records.resize(steps);
  for (std::size_t i = 0; i < steps; ++i)
    sweep.g_grid[i] = g_lo + (g_hi - g_lo) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
  parallel_for(steps, threads, [&](std::size_t i) {
    sweep.records[i] = find_fixed_points({sweep.g_grid[i]}, n, lo, hi, opt);
  });
  return sweep;
}

double locate_stability_boundary(int n, double g_lo, double g_hi, double lo,
                                 double hi, double boundary_tol,
                                 const StabilityOptions& opt) {
  auto stable_count = [&](double g) {
    std::size_t c = 0;
    for (const auto& r : find_fixed_points({g}, n, lo, hi, opt))
      if (r.stability == Stability::Stable) ++c;
    return c;
  };
  std::size_t c_lo = stable_count(g_lo);
  if (c_lo == stable_count(g_hi))
    throw BracketError(
        "locate_stability_boundary: equal stable-root count at both ends");
  while (g_hi - g_lo > boundary_tol) {
    double mid = 0.5 * (g_lo + g_hi);
    if (mid == g_lo || mid == g_hi) break;
    (stable_count(mid) == c_lo ? g_lo : g_hi) = mid;
  }
  return 0.5 * (g_lo + g_hi);
}

}  // namespace procmap
