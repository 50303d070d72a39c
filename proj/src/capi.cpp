#include "procmap.h"

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <string>

#include "procmap/orbit.hpp"
#include "procmap/scan.hpp"
#include "procmap/stability.hpp"
#include "procmap/thresholds.hpp"
#include "procmap/windows.hpp"

namespace {

thread_local std::string g_last_error;

procmap_status fail(procmap_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

/* Run fn, mapping C++ errors onto status codes. */
template <class F>
procmap_status guarded(F&& fn) {
  try {
    return fn();
  } catch (const procmap::DomainError& e) {
    return fail(PROCMAP_ERROR_DOMAIN, e.what());
  } catch (const procmap::BracketError& e) {
    return fail(PROCMAP_ERROR_BRACKET, e.what());
  } catch (const procmap::UnknownRecipeError& e) {
    return fail(PROCMAP_ERROR_UNKNOWN_RECIPE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PROCMAP_ERROR_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PROCMAP_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PROCMAP_ERROR_INTERNAL, e.what());
  }
}

procmap::OrbitSettings to_settings(const procmap_orbit_settings* s) {
  procmap::OrbitSettings out;
  if (s) {
    out.transient = s->transient;
    out.samples = s->samples;
    out.escape_bound =
        s->escape_bound > 0 ? s->escape_bound : procmap::kDefaultEscapeBound;
    out.seed = s->seed;
  }
  return out;
}

procmap::CriticalBranch to_branch(int which) {
  return which == PROCMAP_CRITICAL_A2 ? procmap::CriticalBranch::A2
                                      : procmap::CriticalBranch::A1;
}

int behavior_kind_code(procmap::BehaviorKind k) {
  using procmap::BehaviorKind;
  switch (k) {
    case BehaviorKind::ConvergedFixedPoint: return PROCMAP_BEHAVIOR_FIXED_POINT;
    case BehaviorKind::BoundedPeriodic: return PROCMAP_BEHAVIOR_PERIODIC;
    case BehaviorKind::BoundedChaotic: return PROCMAP_BEHAVIOR_CHAOTIC;
    case BehaviorKind::Biotic: return PROCMAP_BEHAVIOR_BIOTIC;
    case BehaviorKind::PeriodicDivergent:
      return PROCMAP_BEHAVIOR_PERIODIC_DIVERGENT;
    case BehaviorKind::ChaoticDivergent:
      return PROCMAP_BEHAVIOR_CHAOTIC_DIVERGENT;
    case BehaviorKind::Inconclusive: return PROCMAP_BEHAVIOR_INCONCLUSIVE;
  }
  return PROCMAP_BEHAVIOR_INCONCLUSIVE;
}

procmap::BehaviorLabel from_behavior(const procmap_behavior* b) {
  procmap::BehaviorLabel l;
  switch (b->kind) {
    case PROCMAP_BEHAVIOR_FIXED_POINT:
      l.kind = procmap::BehaviorKind::ConvergedFixedPoint;
      break;
    case PROCMAP_BEHAVIOR_PERIODIC:
      l.kind = procmap::BehaviorKind::BoundedPeriodic;
      break;
    case PROCMAP_BEHAVIOR_CHAOTIC:
      l.kind = procmap::BehaviorKind::BoundedChaotic;
      break;
    case PROCMAP_BEHAVIOR_BIOTIC:
      l.kind = procmap::BehaviorKind::Biotic;
      break;
    case PROCMAP_BEHAVIOR_PERIODIC_DIVERGENT:
      l.kind = procmap::BehaviorKind::PeriodicDivergent;
      break;
    case PROCMAP_BEHAVIOR_CHAOTIC_DIVERGENT:
      l.kind = procmap::BehaviorKind::ChaoticDivergent;
      break;
    default:
      l.kind = procmap::BehaviorKind::Inconclusive;
  }
  l.period = b->period;
  l.direction = b->direction;
  l.drift_multiple = b->drift_multiple;
  return l;
}

}  // namespace

struct procmap_orbit {
  procmap::OrbitRecord rec;
};

struct procmap_fixed_point_list {
  std::vector<procmap::FixedPointRecord> records;
};

extern "C" {

const char* procmap_version(void) { return procmap::kVersion; }

const char* procmap_status_name(procmap_status s) {
  switch (s) {
    case PROCMAP_OK: return "ok";
    case PROCMAP_ERROR_DOMAIN: return "domain-error";
    case PROCMAP_ERROR_BRACKET: return "bracket-error";
    case PROCMAP_ERROR_NO_ROOT: return "no-root";
    case PROCMAP_ERROR_INVALID: return "invalid-argument";
    case PROCMAP_ERROR_UNKNOWN_RECIPE: return "unknown-recipe";
    case PROCMAP_ERROR_IO: return "io-error";
    case PROCMAP_ERROR_INTERNAL: return "internal-error";
  }
  return "unknown";
}

const char* procmap_last_error(void) { return g_last_error.c_str(); }

double procmap_eval(double g, double a) { return procmap::eval({g}, a); }

double procmap_deriv(double g, double a) { return procmap::deriv({g}, a); }

procmap_status procmap_iterate_n(double g, double a0, uint64_t n,
                                 double escape_bound, double* out,
                                 int* escaped) {
  if (!out) return fail(PROCMAP_ERROR_INVALID, "out is null");
  auto r = procmap::iterate_n(
      {g}, a0, n,
      escape_bound > 0 ? escape_bound : procmap::kDefaultEscapeBound);
  *out = r.value;
  if (escaped) *escaped = r.escaped ? 1 : 0;
  return PROCMAP_OK;
}

procmap_status procmap_critical_points(double g, double* a1, double* a2) {
  if (!a1 || !a2) return fail(PROCMAP_ERROR_INVALID, "output is null");
  return guarded([&] {
    auto c = procmap::critical_points({g});
    *a1 = c.a1;
    *a2 = c.a2;
    return PROCMAP_OK;
  });
}

procmap_status procmap_orbit_run(double g, double a0,
                                 const procmap_orbit_settings* s,
                                 procmap_orbit** out) {
  if (!out) return fail(PROCMAP_ERROR_INVALID, "out is null");
  return guarded([&] {
    auto handle = std::make_unique<procmap_orbit>();
    handle->rec = procmap::run_orbit({g}, a0, to_settings(s));
    *out = handle.release();
    return PROCMAP_OK;
  });
}

void procmap_orbit_free(procmap_orbit* o) { delete o; }

uint64_t procmap_orbit_length(const procmap_orbit* o) {
  return o ? o->rec.raw.size() : 0;
}

const double* procmap_orbit_samples(const procmap_orbit* o) {
  return o && !o->rec.raw.empty() ? o->rec.raw.data() : nullptr;
}

int procmap_orbit_escaped(const procmap_orbit* o, uint64_t* escape_step) {
  if (!o || o->rec.status != procmap::OrbitStatus::Escaped) return 0;
  if (escape_step) *escape_step = o->rec.escape_step;
  return 1;
}

procmap_status procmap_orbit_mod2pi(const procmap_orbit* o, double* out) {
  if (!o || !out) return fail(PROCMAP_ERROR_INVALID, "null argument");
  auto v = procmap::mod_reduce(o->rec);
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return PROCMAP_OK;
}

procmap_status procmap_orbit_signed_log(const procmap_orbit* o, double* out) {
  if (!o || !out) return fail(PROCMAP_ERROR_INVALID, "null argument");
  auto v = procmap::signed_log(o->rec);
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return PROCMAP_OK;
}

procmap_status procmap_orbit_classify(const procmap_orbit* o,
                                      procmap_behavior* out) {
  if (!o || !out) return fail(PROCMAP_ERROR_INVALID, "null argument");
  auto l = procmap::classify(o->rec);
  out->kind = behavior_kind_code(l.kind);
  out->period = l.period;
  out->direction = l.direction;
  out->drift_multiple = l.drift_multiple;
  out->drift = l.evidence.drift;
  out->range = l.evidence.range;
  out->periodic_residual = l.evidence.periodic_residual;
  out->sign_consistency = l.evidence.sign_consistency;
  out->inconclusive = l.evidence.inconclusive ? 1 : 0;
  return PROCMAP_OK;
}

procmap_status procmap_behavior_label(const procmap_behavior* b, char* buf,
                                      size_t buflen) {
  if (!b || !buf || buflen == 0)
    return fail(PROCMAP_ERROR_INVALID, "null argument");
  std::string s = procmap::label_string(from_behavior(b));
  if (s.size() + 1 > buflen)
    return fail(PROCMAP_ERROR_INVALID, "label buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return PROCMAP_OK;
}

procmap_status procmap_cobweb(double g, double a0, uint64_t steps,
                              double escape_bound, double* xy,
                              uint64_t* count) {
  if (!xy || !count) return fail(PROCMAP_ERROR_INVALID, "null argument");
  if (steps < 1) return fail(PROCMAP_ERROR_INVALID, "steps >= 1");
  auto pts = procmap::cobweb_trace(
      {g}, a0, steps,
      escape_bound > 0 ? escape_bound : procmap::kDefaultEscapeBound);
  for (size_t i = 0; i < pts.size(); ++i) {
    xy[2 * i] = pts[i][0];
    xy[2 * i + 1] = pts[i][1];
  }
  *count = pts.size();
  return PROCMAP_OK;
}

procmap_status procmap_find_fixed_points(double g, int n, double lo, double hi,
                                         size_t grid,
                                         procmap_fixed_point_list** out) {
  if (!out) return fail(PROCMAP_ERROR_INVALID, "out is null");
  return guarded([&] {
    procmap::StabilityOptions opt;
    opt.grid = grid;
    auto handle = std::make_unique<procmap_fixed_point_list>();
    handle->records = procmap::find_fixed_points({g}, n, lo, hi, opt);
    *out = handle.release();
    return PROCMAP_OK;
  });
}

void procmap_fixed_point_list_free(procmap_fixed_point_list* l) { delete l; }

size_t procmap_fixed_point_count(const procmap_fixed_point_list* l) {
  return l ? l->records.size() : 0;
}

procmap_status procmap_fixed_point_get(const procmap_fixed_point_list* l,
                                       size_t index, procmap_fixed_point* out) {
  if (!l || !out) return fail(PROCMAP_ERROR_INVALID, "null argument");
  if (index >= l->records.size())
    return fail(PROCMAP_ERROR_INVALID, "index out of range");
  const auto& r = l->records[index];
  out->a = r.a;
  out->multiplier = r.multiplier;
  switch (r.stability) {
    case procmap::Stability::Stable: out->stability = PROCMAP_STABLE; break;
    case procmap::Stability::Unstable: out->stability = PROCMAP_UNSTABLE; break;
    case procmap::Stability::Neutral: out->stability = PROCMAP_NEUTRAL; break;
  }
  return PROCMAP_OK;
}

procmap_status procmap_stability_boundary(int n, double g_lo, double g_hi,
                                          double lo, double hi, double* out) {
  if (!out) return fail(PROCMAP_ERROR_INVALID, "out is null");
  return guarded([&] {
    *out = procmap::locate_stability_boundary(n, g_lo, g_hi, lo, hi);
    return PROCMAP_OK;
  });
}

procmap_status procmap_bios_onset(double* g, double* a_star, double* residual) {
  if (!g) return fail(PROCMAP_ERROR_INVALID, "g is null");
  auto r = procmap::solve_bios_onset();
  *g = r.g;
  if (a_star) *a_star = r.aux;
  if (residual) *residual = r.residual;
  return PROCMAP_OK;
}

procmap_status procmap_ballistic_onset(int k, double* g, double* a_k) {
  if (!g) return fail(PROCMAP_ERROR_INVALID, "g is null");
  return guarded([&] {
    auto r = procmap::ballistic_onset(k);
    *g = r.g;
    if (a_k) *a_k = r.aux;
    return PROCMAP_OK;
  });
}

procmap_status procmap_lstep_solve_g(int L, double a_k, double g_lo,
                                     double g_hi, double* g, double* residual) {
  if (!g) return fail(PROCMAP_ERROR_INVALID, "g is null");
  return guarded([&] {
    if (g_lo == 0 && g_hi == 0) {
      g_lo = 4.6;
      g_hi = procmap::kTwoPi;
    }
    auto r = procmap::solve_lstep(L, a_k, g_lo, g_hi);
    if (!r)
      return fail(PROCMAP_ERROR_NO_ROOT,
                  "no sign change in the g bracket for this state");
    *g = r->g;
    if (residual) *residual = r->residual;
    return PROCMAP_OK;
  });
}

procmap_status procmap_lstep_solve_a(int L, double g, double a_lo, double a_hi,
                                     double* a_k, double* residual) {
  if (!a_k) return fail(PROCMAP_ERROR_INVALID, "a_k is null");
  return guarded([&] {
    if (a_lo == 0 && a_hi == 0) {
      a_lo = 1e-9;
      a_hi = procmap::kPi - 1e-9;
    }
    auto r = procmap::solve_lstep_state(L, g, a_lo, a_hi);
    if (!r)
      return fail(PROCMAP_ERROR_NO_ROOT,
                  "no sign change in the state bracket at this g");
    *a_k = r->aux;
    if (residual) *residual = r->residual;
    return PROCMAP_OK;
  });
}

procmap_status procmap_window_predicate(double g, int L, int I, int n_max,
                                        int which_critical, int* out) {
  if (!out) return fail(PROCMAP_ERROR_INVALID, "out is null");
  return guarded([&] {
    procmap::WindowPredicateSpec spec{L, I, n_max, to_branch(which_critical)};
    *out = procmap::window_predicate({g}, spec) ? 1 : 0;
    return PROCMAP_OK;
  });
}

procmap_status procmap_find_windows(int L, int I, int n_max, int which_critical,
                                    double g_lo, double g_hi, size_t grid,
                                    unsigned threads, procmap_window* out,
                                    size_t capacity, size_t* count) {
  if (!count || (capacity > 0 && !out))
    return fail(PROCMAP_ERROR_INVALID, "null argument");
  return guarded([&] {
    procmap::WindowPredicateSpec spec{L, I, n_max, to_branch(which_critical)};
    auto ws = procmap::find_windows(spec, g_lo, g_hi, grid, 1e-6, threads);
    *count = ws.size();
    for (size_t i = 0; i < ws.size() && i < capacity; ++i) {
      out[i].g_lo = ws[i].g_lo;
      out[i].g_hi = ws[i].g_hi;
      out[i].truncated = ws[i].truncated_lo || ws[i].truncated_hi;
    }
    return PROCMAP_OK;
  });
}

procmap_status procmap_qcurve(int n, int which_critical, const double* g_values,
                              size_t count, double* values) {
  if (!g_values || !values) return fail(PROCMAP_ERROR_INVALID, "null argument");
  return guarded([&] {
    auto q = procmap::q_curve(n, to_branch(which_critical),
                              std::span<const double>(g_values, count));
    std::memcpy(values, q.values.data(), count * sizeof(double));
    return PROCMAP_OK;
  });
}

procmap_status procmap_scan_to_file(const procmap_scan_config* cfg,
                                    const char* path) {
  if (!cfg || !path) return fail(PROCMAP_ERROR_INVALID, "null argument");
  return guarded([&] {
    procmap::ScanGrid grid;
    grid.g_lo = cfg->g_lo;
    grid.g_hi = cfg->g_hi;
    grid.g_steps = cfg->g_steps;
    switch (cfg->ic_policy) {
      case PROCMAP_IC_FIXED:
        grid.ic.kind = procmap::IcPolicy::Kind::Fixed;
        grid.ic.fixed = cfg->ic_fixed;
        break;
      case PROCMAP_IC_RANDOM:
        grid.ic.kind = procmap::IcPolicy::Kind::RandomPerG;
        break;
      case PROCMAP_IC_LIST:
        grid.ic.kind = procmap::IcPolicy::Kind::List;
        grid.ic.list.assign(cfg->ic_list, cfg->ic_list + cfg->ic_count);
        break;
      default:
        return fail(PROCMAP_ERROR_INVALID, "bad ic_policy");
    }
    grid.orbit = to_settings(&cfg->orbit);
    switch (cfg->transform) {
      case PROCMAP_TRANSFORM_RAW:
        grid.transform = procmap::Transform::Raw;
        break;
      case PROCMAP_TRANSFORM_MOD2PI:
        grid.transform = procmap::Transform::Mod2Pi;
        break;
      case PROCMAP_TRANSFORM_SIGNEDLOG:
        grid.transform = procmap::Transform::SignedLog;
        break;
      default:
        return fail(PROCMAP_ERROR_INVALID, "bad transform");
    }
    auto result = procmap::bifurcation_scan(grid, cfg->threads);
    auto format = cfg->format == PROCMAP_FORMAT_NDJSON
                      ? procmap::OutputFormat::Ndjson
                      : procmap::OutputFormat::Csv;
    if (std::strcmp(path, "-") == 0) {
      procmap::write_scan(result, std::cout, format);
    } else {
      std::ofstream os(path);
      if (!os) return fail(PROCMAP_ERROR_IO, std::string("cannot open ") + path);
      procmap::write_scan(result, os, format);
    }
    return PROCMAP_OK;
  });
}

procmap_status procmap_recipe_run(const char* name, const char* out_dir,
                                  unsigned threads) {
  if (!name || !out_dir) return fail(PROCMAP_ERROR_INVALID, "null argument");
  return guarded([&] {
    auto paths = procmap::run_recipe(name, out_dir, threads);
    for (const auto& p : paths) std::printf("%s\n", p.c_str());
    return PROCMAP_OK;
  });
}

const char* procmap_recipe_names(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : procmap::recipe_names()) {
      if (!s.empty()) s += " ";
      s += n;
    }
    return s;
  }();
  return names.c_str();
}

} /* extern "C" */
