#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

#include "procmap/map.hpp"

namespace procmap {

/// Bisect a bracketed root of fn on [lo, hi]. Requires fn(lo) and fn(hi) to
/// have opposite (or zero) signs. Stops when the residual drops below
/// residual_tol or the bracket width below width_tol.
template <class F>
double bisect_root(F&& fn, double lo, double hi, double residual_tol,
                   double width_tol = 0.0, int max_iter = 200) {
  double flo = fn(lo);
  if (flo == 0.0) return lo;
  double fhi = fn(hi);
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw BracketError("bisect_root: no sign change on the bracket");
  for (int i = 0; i < max_iter; ++i) {
    double mid = 0.5 * (lo + hi);
    double fmid = fn(mid);
    if (std::abs(fmid) < residual_tol || hi - lo <= width_tol || mid == lo ||
        mid == hi)
      return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Refine the transition point of a boolean predicate between x_true (where
/// pred holds) and x_false (where it does not), to width tol. Returns the
/// innermost point where the predicate still holds.
template <class P>
double bisect_predicate_edge(P&& pred, double x_true, double x_false,
                             double tol, int max_iter = 200) {
  for (int i = 0; i < max_iter && std::abs(x_false - x_true) > tol; ++i) {
    double mid = 0.5 * (x_true + x_false);
    if (mid == x_true || mid == x_false) break;
    (pred(mid) ? x_true : x_false) = mid;
  }
  return x_true;
}

/// Scan [lo, hi] on a uniform grid of `cells` intervals and bisect the first
/// sign change encountered (smallest root). Empty when fn never changes sign.
template <class F>
std::optional<double> first_bracketed_root(F&& fn, double lo, double hi,
                                           std::size_t cells,
                                           double residual_tol) {
  double prev_x = lo;
  double prev_f = fn(lo);
  if (prev_f == 0.0) return lo;
  for (std::size_t i = 1; i <= cells; ++i) {
    double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(cells);
    double f = fn(x);
    if (f == 0.0) return x;
    if ((prev_f < 0.0) != (f < 0.0))
      return bisect_root(fn, prev_x, x, residual_tol);
    prev_x = x;
    prev_f = f;
  }
  return std::nullopt;
}

}  // namespace procmap
