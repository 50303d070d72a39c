#include "procmap/windows.hpp"

#include <cmath>
#include <stdexcept>

#include "procmap/bisect.hpp"
#include "procmap/parallel.hpp"

namespace procmap {

namespace {

double critical_state(MapParams p, CriticalBranch branch) {
  CriticalPair c = critical_points(p);
  return branch == CriticalBranch::A1 ? c.a1 : c.a2;
}

}  // namespace

bool window_predicate(MapParams p, const WindowPredicateSpec& spec) {
  if (spec.stride < 1 || spec.half_index < 1 || spec.n_max < 1)
    throw std::invalid_argument("window_predicate: L, I, n_max >= 1");
  double a = critical_state(p, spec.branch);
  const double upper = (2.0 * spec.half_index + 1.0) * kPi;
  for (int n = 1; n <= spec.n_max; ++n) {
    for (int s = 0; s < spec.stride; ++s) a = eval(p, a);
    if (n % 2 == 1) {
      if (!(a > upper)) return false;
    } else {
      if (!(a < kPi)) return false;
    }
  }
  return true;
}

std::vector<WindowInterval> find_windows(const WindowPredicateSpec& spec,
                                         double g_lo, double g_hi,
                                         std::size_t grid, double boundary_tol,
                                         unsigned threads) {
  if (!(g_lo > 1.0)) throw std::invalid_argument("find_windows: g_lo > 1");
  if (!(g_lo < g_hi)) throw std::invalid_argument("find_windows: g_lo < g_hi");
  if (grid == 0)
    grid = static_cast<std::size_t>((g_hi - g_lo) * kWindowGridPerUnit) + 2;
  auto g_at = [&](std::size_t i) {
    return g_lo + (g_hi - g_lo) * static_cast<double>(i) /
                      static_cast<double>(grid - 1);
  };
  auto pred = [&](double g) { return window_predicate({g}, spec); };

  std::vector<char> hit(grid);
  parallel_for(grid, threads, [&](std::size_t i) { hit[i] = pred(g_at(i)); });

  std::vector<WindowInterval> out;
  std::size_t i = 0;
  while (i < grid) {
    if (!hit[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < grid && hit[j + 1]) ++j;
    WindowInterval w;
    w.spec = spec;
    if (i == 0) {
      w.g_lo = g_lo;
      w.truncated_lo = true;
    } else {
      w.g_lo = bisect_predicate_edge(pred, g_at(i), g_at(i - 1), boundary_tol);
    }
    if (j + 1 == grid) {
      w.g_hi = g_hi;
      w.truncated_hi = true;
    } else {
      w.g_hi = bisect_predicate_edge(pred, g_at(j), g_at(j + 1), boundary_tol);
    }
    out.push_back(w);
    i = j + 1;
  }
  return out;
}

QCurve q_curve(int n, CriticalBranch branch, std::span<const double> g_grid) {
  if (n < 1) throw std::invalid_argument("q_curve: n >= 1");
  QCurve q;
  q.n = n;
  q.branch = branch;
  q.g.assign(g_grid.begin(), g_grid.end());
  q.values.reserve(g_grid.size());
  for (double g : g_grid) {
    MapParams p{g};
    double a = critical_state(p, branch);
    for (int i = 0; i < n; ++i) a = eval(p, a);
    q.values.push_back(mod_two_pi(a));
  }
  return q;
}

}  // namespace procmap
