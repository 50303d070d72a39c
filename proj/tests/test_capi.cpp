#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "procmap.h"

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("version and status names") {
  CHECK(std::string(procmap_version()) == "0.1.0");
  CHECK(std::string(procmap_status_name(PROCMAP_OK)) == "ok");
  CHECK(std::string(procmap_status_name(PROCMAP_ERROR_DOMAIN)) ==
        "domain-error");
  CHECK(std::string(procmap_status_name(PROCMAP_ERROR_NO_ROOT)) == "no-root");
}

TEST_CASE("map core") {
  CHECK(procmap_eval(1.5, kPi) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(procmap_deriv(1.5, 0.0) == doctest::Approx(2.5).epsilon(1e-14));

  double out = 0.0;
  int escaped = -1;
  CHECK(procmap_iterate_n(1.5, kPi / 2, 1000, 0.0, &out, &escaped) ==
        PROCMAP_OK);
  CHECK(out == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(escaped == 0);

  CHECK(procmap_iterate_n(2 * kPi, kPi / 2, 1000000, 1e3, &out, &escaped) ==
        PROCMAP_OK);
  CHECK(escaped == 1);

  double a1 = 0.0, a2 = 0.0;
  CHECK(procmap_critical_points(4.62, &a1, &a2) == PROCMAP_OK);
  CHECK(a1 == doctest::Approx(std::acos(-1.0 / 4.62)).epsilon(1e-15));
  CHECK(a2 == doctest::Approx(2 * kPi - a1).epsilon(1e-15));

  CHECK(procmap_critical_points(1.0, &a1, &a2) == PROCMAP_ERROR_DOMAIN);
  CHECK(std::strlen(procmap_last_error()) > 0);
}

TEST_CASE("orbit lifecycle and classification") {
  procmap_orbit_settings s{5000, 4096, 0.0, 0};
  procmap_orbit* o = nullptr;
  REQUIRE(procmap_orbit_run(9.21, kPi / 2, &s, &o) == PROCMAP_OK);
  REQUIRE(o != nullptr);
  CHECK(procmap_orbit_length(o) == 4096);

  uint64_t step = 0;
  CHECK(procmap_orbit_escaped(o, &step) == 0);

  const double* raw = procmap_orbit_samples(o);
  REQUIRE(raw != nullptr);
  std::vector<double> mod(4096);
  CHECK(procmap_orbit_mod2pi(o, mod.data()) == PROCMAP_OK);
  for (std::size_t i = 0; i < mod.size(); ++i) {
    CHECK(mod[i] >= 0.0);
    CHECK(mod[i] < 2 * kPi);
    CHECK(std::abs(std::remainder(raw[i] - mod[i], 2 * kPi)) < 1e-9);
  }

  procmap_behavior b;
  CHECK(procmap_orbit_classify(o, &b) == PROCMAP_OK);
  CHECK(b.kind == PROCMAP_BEHAVIOR_PERIODIC);
  CHECK(b.period == 2);
  char buf[64];
  CHECK(procmap_behavior_label(&b, buf, sizeof buf) == PROCMAP_OK);
  CHECK(std::string(buf) == "bounded-periodic(2)");
  procmap_orbit_free(o);
}

TEST_CASE("signed log transform") {
  procmap_orbit_settings s{0, 3, 0.0, 0};
  procmap_orbit* o = nullptr;
  REQUIRE(procmap_orbit_run(0.0, 9.0, &s, &o) == PROCMAP_OK);
  double v[3];
  CHECK(procmap_orbit_signed_log(o, v) == PROCMAP_OK);
  for (double x : v) CHECK(x == doctest::Approx(1.0).epsilon(1e-15));
  procmap_orbit_free(o);
}

TEST_CASE("cobweb") {
  double xy[2 * (2 * 3 + 1)];
  uint64_t count = 0;
  CHECK(procmap_cobweb(1.5, kPi / 2, 3, 0.0, xy, &count) == PROCMAP_OK);
  CHECK(count == 7);
  CHECK(xy[0] == kPi / 2);
  CHECK(xy[3] == doctest::Approx(kPi / 2 + 1.5).epsilon(1e-15));
}

TEST_CASE("fixed points and stability boundary") {
  procmap_fixed_point_list* l = nullptr;
  REQUIRE(procmap_find_fixed_points(1.5, 1, 0.0, 2 * kPi, 0, &l) == PROCMAP_OK);
  REQUIRE(procmap_fixed_point_count(l) == 2);
  procmap_fixed_point fp;
  CHECK(procmap_fixed_point_get(l, 1, &fp) == PROCMAP_OK);
  CHECK(fp.a == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(fp.stability == PROCMAP_STABLE);
  CHECK(procmap_fixed_point_get(l, 2, &fp) == PROCMAP_ERROR_INVALID);
  procmap_fixed_point_list_free(l);

  double g = 0.0;
  CHECK(procmap_stability_boundary(1, 1.5, 2.5, 0.0, 2 * kPi, &g) ==
        PROCMAP_OK);
  CHECK(g == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(procmap_stability_boundary(1, 0.5, 1.5, 0.0, 2 * kPi, &g) ==
        PROCMAP_ERROR_BRACKET);
}

TEST_CASE("thresholds") {
  double g = 0.0, a = 0.0, res = 1.0;
  CHECK(procmap_bios_onset(&g, &a, &res) == PROCMAP_OK);
  CHECK(std::abs(g - 4.60333884875170035) < 1e-10);
  CHECK(std::abs(res) < 1e-12);

  CHECK(procmap_ballistic_onset(2, &g, &a) == PROCMAP_OK);
  CHECK(g == doctest::Approx(4 * kPi).epsilon(1e-15));
  CHECK(a == kPi / 2);

  CHECK(procmap_lstep_solve_g(2, 1.73, 0.0, 0.0, &g, &res) == PROCMAP_OK);
  CHECK(std::abs(g - 4.91152966246431) < 1e-10);

  CHECK(procmap_lstep_solve_g(2, kPi, 0.0, 0.0, &g, &res) ==
        PROCMAP_ERROR_NO_ROOT);

  CHECK(procmap_lstep_solve_a(2, 4.91152966246431, 1.2, 2.2, &a, &res) ==
        PROCMAP_OK);
  CHECK(std::abs(a - 1.73) < 0.01);
}

TEST_CASE("windows and q-curves") {
  int inside = -1;
  CHECK(procmap_window_predicate(9.21, 1, 1, 20, PROCMAP_CRITICAL_A1,
                                 &inside) == PROCMAP_OK);
  CHECK(inside == 1);
  CHECK(procmap_window_predicate(8.5, 1, 1, 20, PROCMAP_CRITICAL_A1,
                                 &inside) == PROCMAP_OK);
  CHECK(inside == 0);

  procmap_window w[4];
  size_t count = 0;
  CHECK(procmap_find_windows(1, 1, 3, PROCMAP_CRITICAL_A1, 8.8, 10.0, 0, 1, w,
                             4, &count) == PROCMAP_OK);
  REQUIRE(count == 1);
  CHECK(w[0].g_lo == doctest::Approx(9.00627).epsilon(2e-5));
  CHECK(w[0].g_hi == doctest::Approx(9.75591).epsilon(2e-5));
  CHECK(w[0].truncated == 0);

  double gs[3] = {4.7, 5.0, 9.21};
  double qs[3];
  CHECK(procmap_qcurve(1, PROCMAP_CRITICAL_A1, gs, 3, qs) == PROCMAP_OK);
  for (double q : qs) {
    CHECK(q >= 0.0);
    CHECK(q < 2 * kPi);
  }
}

TEST_CASE("scan to file") {
  namespace fs = std::filesystem;
  auto path = fs::temp_directory_path() / "procmap_capi_scan.csv";
  procmap_scan_config cfg{};
  cfg.g_lo = 1.5;
  cfg.g_hi = 3.3;
  cfg.g_steps = 3;
  cfg.ic_policy = PROCMAP_IC_FIXED;
  cfg.ic_fixed = kPi / 2;
  cfg.orbit = {500, 8, 0.0, 1};
  cfg.transform = PROCMAP_TRANSFORM_MOD2PI;
  cfg.format = PROCMAP_FORMAT_CSV;
  cfg.threads = 1;
  REQUIRE(procmap_scan_to_file(&cfg, path.string().c_str()) == PROCMAP_OK);

  std::ifstream in(path);
  std::string line;
  bool header = false;
  while (std::getline(in, line))
    if (line == "g,ic,sample_index,value,status,label,seed") header = true;
  CHECK(header);
  fs::remove(path);

  CHECK(procmap_scan_to_file(&cfg, "/nonexistent-dir/x.csv") ==
        PROCMAP_ERROR_IO);
}

TEST_CASE("recipes") {
  std::string names = procmap_recipe_names();
  CHECK(names.find("fig1a") != std::string::npos);
  CHECK(procmap_recipe_run("nope", "/tmp", 1) ==
        PROCMAP_ERROR_UNKNOWN_RECIPE);
  CHECK(std::strlen(procmap_last_error()) > 0);
}
