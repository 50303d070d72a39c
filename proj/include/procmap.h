/* C interface to the process-map analysis library.
 *
 * All functions are thread-safe. Functions returning procmap_status report
 * failures through the code; procmap_last_error() gives a human-readable
 * message for the most recent failure on the calling thread. Opaque handles
 * must be released with their matching *_free function.
 */
#ifndef PROCMAP_H
#define PROCMAP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PROCMAP_API __declspec(dllexport)
#else
#define PROCMAP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum procmap_status {
  PROCMAP_OK = 0,
  PROCMAP_ERROR_DOMAIN = 1,        /* input outside the operation's domain */
  PROCMAP_ERROR_BRACKET = 2,       /* bracket does not isolate a change */
  PROCMAP_ERROR_NO_ROOT = 3,       /* no sign change in the search bracket */
  PROCMAP_ERROR_INVALID = 4,       /* malformed argument */
  PROCMAP_ERROR_UNKNOWN_RECIPE = 5,
  PROCMAP_ERROR_IO = 6,
  PROCMAP_ERROR_INTERNAL = 7
} procmap_status;

PROCMAP_API const char* procmap_version(void);
PROCMAP_API const char* procmap_status_name(procmap_status s);
/* Message for the last failing call on this thread; empty string if none. */
PROCMAP_API const char* procmap_last_error(void);

/* ---- map core ---- */

PROCMAP_API double procmap_eval(double g, double a);
PROCMAP_API double procmap_deriv(double g, double a);

/* Writes the n-th iterate to *out. If the trajectory exceeds escape_bound
 * (pass 0 for the default 1e12), *escaped is set to 1 and *out holds the
 * first out-of-bound value. escaped may be NULL. */
PROCMAP_API procmap_status procmap_iterate_n(double g, double a0, uint64_t n,
                                             double escape_bound, double* out,
                                             int* escaped);

/* a1 = acos(-1/g) and a2 = 2*pi - a1; requires g > 1. */
PROCMAP_API procmap_status procmap_critical_points(double g, double* a1,
                                                   double* a2);

/* ---- orbits ---- */

typedef struct procmap_orbit_settings {
  uint64_t transient;   /* iterations discarded before recording */
  uint64_t samples;     /* iterations recorded */
  double escape_bound;  /* 0 selects the default 1e12 */
  uint64_t seed;        /* surfaced in scan output */
} procmap_orbit_settings;

typedef struct procmap_orbit procmap_orbit; /* opaque */

PROCMAP_API procmap_status procmap_orbit_run(double g, double a0,
                                             const procmap_orbit_settings* s,
                                             procmap_orbit** out);
PROCMAP_API void procmap_orbit_free(procmap_orbit* o);
PROCMAP_API uint64_t procmap_orbit_length(const procmap_orbit* o);
/* Raw samples; pointer valid until the orbit is freed. */
PROCMAP_API const double* procmap_orbit_samples(const procmap_orbit* o);
/* Returns 1 and sets *escape_step when the orbit escaped. */
PROCMAP_API int procmap_orbit_escaped(const procmap_orbit* o,
                                      uint64_t* escape_step);
/* out must hold procmap_orbit_length(o) doubles. */
PROCMAP_API procmap_status procmap_orbit_mod2pi(const procmap_orbit* o,
                                                double* out);
PROCMAP_API procmap_status procmap_orbit_signed_log(const procmap_orbit* o,
                                                    double* out);

enum {
  PROCMAP_BEHAVIOR_FIXED_POINT = 0,
  PROCMAP_BEHAVIOR_PERIODIC = 1,
  PROCMAP_BEHAVIOR_CHAOTIC = 2,
  PROCMAP_BEHAVIOR_BIOTIC = 3,
  PROCMAP_BEHAVIOR_PERIODIC_DIVERGENT = 4,
  PROCMAP_BEHAVIOR_CHAOTIC_DIVERGENT = 5,
  PROCMAP_BEHAVIOR_INCONCLUSIVE = 6
};

typedef struct procmap_behavior {
  int kind;            /* PROCMAP_BEHAVIOR_* */
  int period;          /* periodic kinds */
  int direction;       /* +1 / -1 for divergent kinds */
  long drift_multiple; /* m in A_{t+p} - A_t = 2*pi*m */
  double drift;
  double range;
  double periodic_residual;
  double sign_consistency;
  int inconclusive;
} procmap_behavior;

PROCMAP_API procmap_status procmap_orbit_classify(const procmap_orbit* o,
                                                  procmap_behavior* out);
/* Compact label such as "bounded-periodic(2)"; buffer of >= 64 chars. */
PROCMAP_API procmap_status procmap_behavior_label(const procmap_behavior* b,
                                                  char* buf, size_t buflen);

/* Staircase points (x0,y0,x1,y1,...); xy must hold 2*(2*steps+1) doubles.
 * *count receives the number of points actually written. */
PROCMAP_API procmap_status procmap_cobweb(double g, double a0, uint64_t steps,
                                          double escape_bound, double* xy,
                                          uint64_t* count);

/* ---- fixed points and stability ---- */

enum {
  PROCMAP_STABLE = 0,
  PROCMAP_UNSTABLE = 1,
  PROCMAP_NEUTRAL = 2
};

typedef struct procmap_fixed_point {
  double a;
  double multiplier;
  int stability; /* PROCMAP_STABLE / ... */
} procmap_fixed_point;

typedef struct procmap_fixed_point_list procmap_fixed_point_list; /* opaque */

/* Roots of f^n(A) - A on [lo, hi); grid = 0 uses the order-dependent
 * default. */
PROCMAP_API procmap_status procmap_find_fixed_points(
    double g, int n, double lo, double hi, size_t grid,
    procmap_fixed_point_list** out);
PROCMAP_API void procmap_fixed_point_list_free(procmap_fixed_point_list* l);
PROCMAP_API size_t procmap_fixed_point_count(const procmap_fixed_point_list* l);
PROCMAP_API procmap_status procmap_fixed_point_get(
    const procmap_fixed_point_list* l, size_t index, procmap_fixed_point* out);

/* g at which the stable-root count of f^n on [lo, hi) changes inside
 * [g_lo, g_hi]. */
PROCMAP_API procmap_status procmap_stability_boundary(int n, double g_lo,
                                                      double g_hi, double lo,
                                                      double hi, double* out);

/* ---- bifurcation thresholds ---- */

PROCMAP_API procmap_status procmap_bios_onset(double* g, double* a_star,
                                              double* residual);
PROCMAP_API procmap_status procmap_ballistic_onset(int k, double* g,
                                                   double* a_k);
/* Smallest g in [g_lo, g_hi] with f^L(a_k) - a_k = 2*pi; pass 0,0 for the
 * default bracket (4.6, 2*pi). */
PROCMAP_API procmap_status procmap_lstep_solve_g(int L, double a_k,
                                                 double g_lo, double g_hi,
                                                 double* g, double* residual);
/* Same condition with g fixed, solved for a_k on (0, pi). */
PROCMAP_API procmap_status procmap_lstep_solve_a(int L, double g, double a_lo,
                                                 double a_hi, double* a_k,
                                                 double* residual);

/* ---- periodic windows and Q-curves ---- */

enum {
  PROCMAP_CRITICAL_A1 = 0,
  PROCMAP_CRITICAL_A2 = 1
};

PROCMAP_API procmap_status procmap_window_predicate(double g, int L, int I,
                                                    int n_max,
                                                    int which_critical,
                                                    int* out);

typedef struct procmap_window {
  double g_lo;
  double g_hi;
  int truncated; /* interval touched the scan boundary */
} procmap_window;

/* Fills up to capacity windows; *count receives the number found (may exceed
 * capacity, in which case only the first `capacity` are stored).
 * grid = 0 uses the default density; threads = 0 uses PROCMAP_THREADS. */
PROCMAP_API procmap_status procmap_find_windows(int L, int I, int n_max,
                                                int which_critical,
                                                double g_lo, double g_hi,
                                                size_t grid, unsigned threads,
                                                procmap_window* out,
                                                size_t capacity, size_t* count);

/* values must hold count doubles: f^n(A*) mod 2*pi at each grid g. */
PROCMAP_API procmap_status procmap_qcurve(int n, int which_critical,
                                          const double* g_values, size_t count,
                                          double* values);

/* ---- parameter scans ---- */

enum {
  PROCMAP_TRANSFORM_RAW = 0,
  PROCMAP_TRANSFORM_MOD2PI = 1,
  PROCMAP_TRANSFORM_SIGNEDLOG = 2
};

enum {
  PROCMAP_IC_FIXED = 0,
  PROCMAP_IC_RANDOM = 1,
  PROCMAP_IC_LIST = 2
};

enum {
  PROCMAP_FORMAT_CSV = 0,
  PROCMAP_FORMAT_NDJSON = 1
};

typedef struct procmap_scan_config {
  double g_lo;
  double g_hi;
  size_t g_steps;
  int ic_policy;         /* PROCMAP_IC_* */
  double ic_fixed;       /* PROCMAP_IC_FIXED */
  const double* ic_list; /* PROCMAP_IC_LIST */
  size_t ic_count;
  procmap_orbit_settings orbit;
  int transform; /* PROCMAP_TRANSFORM_* */
  int format;    /* PROCMAP_FORMAT_* */
  unsigned threads;
} procmap_scan_config;

/* Runs the scan and writes the result to path ("-" for stdout). Output is
 * byte-identical across runs for a fixed config and seed. */
PROCMAP_API procmap_status procmap_scan_to_file(const procmap_scan_config* cfg,
                                                const char* path);

/* ---- figure recipes ---- */

/* Writes the recipe's CSV files under out_dir and prints each path to
 * stdout. */
PROCMAP_API procmap_status procmap_recipe_run(const char* name,
                                              const char* out_dir,
                                              unsigned threads);
/* Space-separated list of recipe names. */
PROCMAP_API const char* procmap_recipe_names(void);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROCMAP_H */
