#include "procmap/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace procmap {

OrbitRecord run_orbit(MapParams p, double a0, const OrbitSettings& s) {
  OrbitRecord o;
  o.params = p;
  o.a0 = a0;
  double a = a0;
  for (std::uint64_t i = 0; i < s.transient; ++i) {
    a = eval(p, a);
    if (!(std::abs(a) <= s.escape_bound)) {
      o.status = OrbitStatus::Escaped;
      o.escape_step = i + 1;
      return o;
    }
  }
  o.raw.reserve(s.samples);
  for (std::uint64_t i = 0; i < s.samples; ++i) {
    a = eval(p, a);
    if (!(std::abs(a) <= s.escape_bound)) {
      o.status = OrbitStatus::Escaped;
      o.escape_step = s.transient + i + 1;
      return o;
    }
    o.raw.push_back(a);
  }
  return o;
}

std::vector<double> mod_reduce(const OrbitRecord& o) {
  std::vector<double> out;
  out.reserve(o.raw.size());
  for (double a : o.raw) out.push_back(mod_two_pi(a));
  return out;
}

std::vector<double> signed_log(const OrbitRecord& o) {
  std::vector<double> out;
  out.reserve(o.raw.size());
  for (double a : o.raw)
    out.push_back(std::copysign(std::log10(1.0 + std::abs(a)), a));
  return out;
}

namespace {

// Minimal p <= max_period with the mod-2*pi tail p-periodic within eps.
// Returns 0 when none qualifies; *residual reports the best residual seen
// for the returned period.
int detect_mod_period(std::span<const double> tail, int max_period, double eps,
                      double* residual) {
  for (int p = 1; p <= max_period; ++p) {
    if (tail.size() <= static_cast<std::size_t>(p)) break;
    double worst = 0.0;
    for (std::size_t t = 0; t + p < tail.size(); ++t) {
      // circular distance: values straddling the 0/2*pi seam still match
      double d = std::abs(tail[t + p] - tail[t]);
      d = std::min(d, kTwoPi - d);
      worst = std::max(worst, d);
      if (worst >= eps) break;
    }
    if (worst < eps) {
      *residual = worst;
      return p;
    }
  }
  return 0;
}

}  // namespace

BehaviorLabel classify(const OrbitRecord& o, const ClassifyTolerances& tol) {
  BehaviorLabel label;
  const auto& A = o.raw;
  const std::uint64_t need = o.status == OrbitStatus::Escaped
                                 ? tol.min_samples_escaped
                                 : tol.min_samples;
  if (A.size() < need) {
    label.evidence.inconclusive = true;
    return label;
  }
  const std::size_t N = A.size();

  auto [min_it, max_it] = std::minmax_element(A.begin(), A.end());
  label.evidence.range = *max_it - *min_it;
  label.evidence.drift = (A.back() - A.front()) / static_cast<double>(N - 1);

  // 1. settled onto a fixed point
  bool fixed = true;
  for (std::size_t t = N - 32; t < N; ++t) {
    if (std::abs(A[t] - A[t - 1]) >= tol.eps_fix) {
      fixed = false;
      break;
    }
  }
  if (fixed) {
    label.kind = BehaviorKind::ConvergedFixedPoint;
    return label;
  }

  // 2. mod-2*pi periodicity over the last half of the samples
  std::vector<double> B;
  B.reserve(N - N / 2);
  for (std::size_t t = N / 2; t < N; ++t) B.push_back(mod_two_pi(A[t]));
  double residual = 0.0;
  int p = detect_mod_period(B, tol.max_period, tol.eps_per, &residual);
  if (p > 0) {
    label.evidence.detected_period = p;
    label.evidence.periodic_residual = residual;
    const std::size_t half = N / 2;
    double worst_raw = 0.0;
    double mean_m = 0.0;
    std::size_t count = 0;
    for (std::size_t t = half; t + p < N; ++t, ++count) {
      double d = A[t + p] - A[t];
      worst_raw = std::max(worst_raw, std::abs(d));
      mean_m += d / kTwoPi;
    }
    if (count > 0) mean_m /= static_cast<double>(count);
    if (worst_raw < tol.eps_per) {
      label.kind = BehaviorKind::BoundedPeriodic;
      label.period = p;
      return label;
    }
    long m = std::lround(mean_m);
    if (m != 0) {
      bool consistent = true;
      for (std::size_t t = half; t + p < N; ++t) {
        if (std::abs(A[t + p] - A[t] - kTwoPi * static_cast<double>(m)) >=
            tol.eps_per) {
          consistent = false;
          break;
        }
      }
      if (consistent) {
        label.kind = BehaviorKind::PeriodicDivergent;
        label.period = p;
        label.direction = m > 0 ? +1 : -1;
        label.drift_multiple = m;
        return label;
      }
    }
  }

  // 3. ballistic chaotic divergence: strong, sign-consistent drift
  const double d = label.evidence.drift;
  std::size_t agree = 0;
  for (std::size_t t = 1; t < N; ++t)
    if (std::signbit(A[t] - A[t - 1]) == std::signbit(d)) ++agree;
  label.evidence.sign_consistency =
      static_cast<double>(agree) / static_cast<double>(N - 1);
  if (std::abs(d) > tol.drift_min &&
      label.evidence.sign_consistency > tol.sign_consistency) {
    label.kind = BehaviorKind::ChaoticDivergent;
    label.direction = d > 0 ? +1 : -1;
    return label;
  }

  // 4. bounded chaos stays within one sine period; bios wanders past it
  label.kind = label.evidence.range <= kTwoPi + tol.range_eps
                   ? BehaviorKind::BoundedChaotic
                   : BehaviorKind::Biotic;
  return label;
}

const char* to_string(BehaviorKind k) noexcept {
  switch (k) {
    case BehaviorKind::ConvergedFixedPoint: return "converged-fixed-point";
    case BehaviorKind::BoundedPeriodic: return "bounded-periodic";
    case BehaviorKind::BoundedChaotic: return "bounded-chaotic";
    case BehaviorKind::Biotic: return "biotic";
    case BehaviorKind::PeriodicDivergent: return "periodic-divergent";
    case BehaviorKind::ChaoticDivergent: return "chaotic-divergent";
    case BehaviorKind::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string label_string(const BehaviorLabel& l) {
  std::string s = to_string(l.kind);
  switch (l.kind) {
    case BehaviorKind::BoundedPeriodic:
      s += "(" + std::to_string(l.period) + ")";
      break;
    case BehaviorKind::PeriodicDivergent:
      s += "(" + std::to_string(l.period) + "," +
           (l.direction > 0 ? "+" : "-") + ")";
      break;
    case BehaviorKind::ChaoticDivergent:
      s += l.direction > 0 ? "(+)" : "(-)";
      break;
    default:
      break;
  }
  return s;
}

std::vector<std::array<double, 2>> cobweb_trace(MapParams p, double a0,
                                                std::uint64_t steps,
                                                double escape_bound) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(2 * steps + 1);
  double a = a0;
  pts.push_back({a, a});
  for (std::uint64_t i = 0; i < steps; ++i) {
    double next = eval(p, a);
    if (!(std::abs(next) <= escape_bound)) break;
    pts.push_back({a, next});
    pts.push_back({next, next});
    a = next;
  }
  return pts;
}

}  // namespace procmap
