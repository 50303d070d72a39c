#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "procmap/map.hpp"

namespace procmap {

struct OrbitSettings {
  std::uint64_t transient = 5000;
  std::uint64_t samples = 4096;
  double escape_bound = kDefaultEscapeBound;
  std::uint64_t seed = 0;  // surfaced in outputs; used by random IC policies
};

enum class OrbitStatus { Completed, Escaped };

struct OrbitRecord {
  MapParams params;
  double a0 = 0.0;
  std::vector<double> raw;  // samples after the transient, truncated on escape
  OrbitStatus status = OrbitStatus::Completed;
  std::uint64_t escape_step = 0;  // absolute iteration index of the escape
};

OrbitRecord run_orbit(MapParams p, double a0, const OrbitSettings& s);

/// Elementwise fold of the raw trajectory into [0, 2*pi).
std::vector<double> mod_reduce(const OrbitRecord& o);

/// Elementwise sign(A)*log10(1 + |A|); keeps both signs visible through zero.
std::vector<double> signed_log(const OrbitRecord& o);

enum class BehaviorKind {
  ConvergedFixedPoint,
  BoundedPeriodic,
  BoundedChaotic,
  Biotic,
  PeriodicDivergent,
  ChaoticDivergent,
  Inconclusive,
};

struct ClassifyTolerances {
  double eps_fix = 1e-8;      // successive-difference bound for a fixed point
  double eps_per = 1e-6;      // periodicity residual bound
  int max_period = 64;
  double drift_min = kPi / 2;       // per-step drift for ballistic divergence
  double sign_consistency = 0.95;   // fraction of steps agreeing with the drift
  double range_eps = 1e-9;          // slack on the 2*pi bounded-range test
  std::uint64_t min_samples = 256;
  std::uint64_t min_samples_escaped = 64;
};

struct BehaviorEvidence {
  double drift = 0.0;             // per-step mean increment
  double range = 0.0;             // max - min of the raw samples
  double periodic_residual = 0.0;
  double sign_consistency = 0.0;
  int detected_period = 0;
  bool inconclusive = false;
};

struct BehaviorLabel {
  BehaviorKind kind = BehaviorKind::Inconclusive;
  int period = 0;           // for the periodic kinds
  int direction = 0;        // +1 / -1 for the divergent kinds
  long drift_multiple = 0;  // m in A_{t+p} - A_t = 2*pi*m, PeriodicDivergent only
  BehaviorEvidence evidence;
};

/// Deterministic decision procedure over the recorded samples; never throws
/// on orbit content. Orbits shorter than the minimum sample counts come back
/// Inconclusive.
BehaviorLabel classify(const OrbitRecord& o, const ClassifyTolerances& tol = {});

const char* to_string(BehaviorKind k) noexcept;

/// Compact form used in CSV output, e.g. "bounded-periodic(2)" or
/// "periodic-divergent(2,+)".
std::string label_string(const BehaviorLabel& l);

/// Staircase trace (A_t, A_{t+1}), (A_{t+1}, A_{t+1}), ... starting from
/// (a0, a0); 2*steps + 1 points unless truncated by escape.
std::vector<std::array<double, 2>> cobweb_trace(
    MapParams p, double a0, std::uint64_t steps,
    double escape_bound = kDefaultEscapeBound);

}  // namespace procmap
