#pragma once

#include <optional>
#include <span>
#include <vector>

#include "procmap/map.hpp"

namespace procmap {

enum class ThresholdKind { BiosOnset, BallisticOnset, LStepOnset };

struct ThresholdResult {
  double g = 0.0;
  double residual = 0.0;
  double aux = 0.0;  // the A at which the defining condition holds
  ThresholdKind kind = ThresholdKind::BiosOnset;
  int index = 0;  // k for BallisticOnset, L for LStepOnset
};

inline constexpr double kSolverTol = 1e-12;

/// Gain at which the image of the critical point first reaches the next sine
/// period: solves acos(-1/g) + g*sin(acos(-1/g)) = 2*pi on [4, 5].
ThresholdResult solve_bios_onset();

/// Smallest gain with a self-repeating ballistic step of 2*k*pi, attained at
/// A = pi/2 where the sine is maximal: g = 2*k*pi.
ThresholdResult ballistic_onset(int k);

/// Solve f^L(a_k) - a_k = 2*pi for g over the bracket, returning the smallest
/// root. Empty when the residual never changes sign on the bracket (a_k = pi
/// is a fixed point for every g, so the residual stays at -2*pi).
std::optional<ThresholdResult> solve_lstep(int L, double a_k, double g_lo = 4.6,
                                           double g_hi = kTwoPi);

/// Same condition solved in the other direction: g fixed, a_k unknown on
/// [a_lo, a_hi]. Result carries the given g with aux = a_k.
std::optional<ThresholdResult> solve_lstep_state(int L, double g,
                                                 double a_lo = 1e-9,
                                                 double a_hi = kPi - 1e-9);

/// solve_lstep at every grid state that yields a root, deduplicated in g.
std::vector<ThresholdResult> scan_lstep_solutions(int L,
                                                  std::span<const double> a_grid,
                                                  double g_lo, double g_hi,
                                                  double dedup_tol = 1e-9);

}  // namespace procmap
