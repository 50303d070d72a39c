#include "procmap/map.hpp"

#include <cmath>

namespace procmap {

IterateResult iterate_n(MapParams p, double a, std::uint64_t n,
                        double escape_bound) noexcept {
  IterateResult r{a, false, 0};
  for (std::uint64_t i = 0; i < n; ++i) {
    r.value = eval(p, r.value);
    if (!(std::abs(r.value) <= escape_bound)) {  // also catches NaN
      r.escaped = true;
      r.escape_step = i + 1;
      return r;
    }
  }
  return r;
}

double multiplier_n(MapParams p, std::span<const double> orbit_points) noexcept {
  double m = 1.0;
  for (double a : orbit_points) m *= deriv(p, a);
  return m;
}

CriticalPair critical_points(MapParams p) {
  if (!(p.g > 1.0))
    throw DomainError("critical_points: requires g > 1 (acos(-1/g) interior)");
  double a1 = std::acos(-1.0 / p.g);
  return {a1, kTwoPi - a1};
}

}  // namespace procmap
