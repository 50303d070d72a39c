#include "procmap/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "procmap/bisect.hpp"

namespace procmap {

namespace {

double lstep_residual_in_g(double g, int L, double a_k) {
  MapParams p{g};
  double a = a_k;
  for (int i = 0; i < L; ++i) a = eval(p, a);
  return a - a_k - kTwoPi;
}

double lstep_residual_in_a(double a_k, int L, double g) {
  return lstep_residual_in_g(g, L, a_k);
}

}  // namespace

ThresholdResult solve_bios_onset() {
  auto h = [](double g) {
    double a = std::acos(-1.0 / g);
    return a + g * std::sin(a) - kTwoPi;
  };
  double g = bisect_root(h, 4.0, 5.0, 1e-13, 0.0, 200);
  ThresholdResult r;
  r.g = g;
  r.aux = std::acos(-1.0 / g);
  r.residual = h(g);
  r.kind = ThresholdKind::BiosOnset;
  return r;
}

ThresholdResult ballistic_onset(int k) {
  if (k < 1) throw std::invalid_argument("ballistic_onset: k >= 1");
  ThresholdResult r;
  r.g = 2.0 * static_cast<double>(k) * kPi;
  r.aux = kPi / 2;
  r.residual = 0.0;  // g*sin(pi/2) - 2*k*pi vanishes identically
  r.kind = ThresholdKind::BallisticOnset;
  r.index = k;
  return r;
}

std::optional<ThresholdResult> solve_lstep(int L, double a_k, double g_lo,
                                           double g_hi) {
  if (L < 2) throw std::invalid_argument("solve_lstep: L >= 2");
  if (!(a_k > 0.0 && a_k <= kPi))
    throw std::invalid_argument("solve_lstep: a_k in (0, pi]");
  auto h = [&](double g) { return lstep_residual_in_g(g, L, a_k); };
  auto root = first_bracketed_root(h, g_lo, g_hi, 512, kSolverTol);
  if (!root) return std::nullopt;
  ThresholdResult r;
  r.g = *root;
  r.aux = a_k;
  r.residual = h(*root);
  r.kind = ThresholdKind::LStepOnset;
  r.index = L;
  return r;
}

std::optional<ThresholdResult> solve_lstep_state(int L, double g, double a_lo,
                                                 double a_hi) {
  if (L < 2) throw std::invalid_argument("solve_lstep_state: L >= 2");
  auto h = [&](double a) { return lstep_residual_in_a(a, L, g); };
  auto root = first_bracketed_root(h, a_lo, a_hi, 4096, kSolverTol);
  if (!root) return std::nullopt;
  ThresholdResult r;
  r.g = g;
  r.aux = *root;
  r.residual = h(*root);
  r.kind = ThresholdKind::LStepOnset;
  r.index = L;
  return r;
}

std::vector<ThresholdResult> scan_lstep_solutions(int L,
                                                  std::span<const double> a_grid,
                                                  double g_lo, double g_hi,
                                                  double dedup_tol) {
  std::vector<ThresholdResult> out;
  for (double a : a_grid) {
    if (!(a > 0.0 && a <= kPi)) continue;
    if (auto r = solve_lstep(L, a, g_lo, g_hi)) out.push_back(*r);
  }
  std::sort(out.begin(), out.end(),
            [](const ThresholdResult& x, const ThresholdResult& y) {
              return x.g < y.g;
            });
  std::vector<ThresholdResult> dedup;
  for (const auto& r : out) {
    if (!dedup.empty() && r.g - dedup.back().g <= dedup_tol) continue;
    dedup.push_back(r);
  }
  return dedup;
}

}  // namespace procmap
