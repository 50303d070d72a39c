#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "procmap/stability.hpp"

using namespace procmap;

namespace {

std::size_t stable_count(const std::vector<FixedPointRecord>& recs) {
  return std::count_if(recs.begin(), recs.end(), [](const FixedPointRecord& r) {
    return r.stability == Stability::Stable;
  });
}

bool has_root_near(const std::vector<FixedPointRecord>& recs, double a,
                   double tol = 1e-6) {
  return std::any_of(recs.begin(), recs.end(), [&](const FixedPointRecord& r) {
    return std::abs(r.a - a) < tol;
  });
}

}  // namespace

TEST_CASE("fixed points of f at g = 1.5") {
  auto recs = find_fixed_points({1.5}, 1, 0.0, kTwoPi, {});
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].a == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(recs[0].stability == Stability::Unstable);
  CHECK(recs[0].multiplier == doctest::Approx(2.5).epsilon(1e-9));
  CHECK(recs[1].a == doctest::Approx(kPi).epsilon(1e-9));
  CHECK(recs[1].stability == Stability::Stable);
  CHECK(recs[1].multiplier == doctest::Approx(-0.5).epsilon(1e-9));
}

TEST_CASE("second iterate gains a stable period-2 pair at g = 2.5") {
  auto recs = find_fixed_points({2.5}, 2, 0.0, kTwoPi, {});
  CHECK(stable_count(recs) == 2);
  CHECK(has_root_near(recs, 0.0));
  CHECK(has_root_near(recs, kPi));
  for (const auto& r : recs) {
    if (std::abs(r.a) < 1e-6 || std::abs(r.a - kPi) < 1e-6)
      CHECK(r.stability == Stability::Unstable);
    CHECK(std::abs(iterate_n({2.5}, r.a, 2).value - r.a) < 1e-9);
  }
}

TEST_CASE("two coexisting period-2 attractors at g = 3.3") {
  auto recs = find_fixed_points({3.3}, 2, 0.0, kTwoPi, {});
  CHECK(stable_count(recs) == 4);
}

TEST_CASE("stable-root counts across the sweeps") {
  // period-2 unification: 2 stable roots before g = pi, 4 after
  auto sweep2 = sweep_stability(2, 2.8, 3.445, 8, 0.0, kTwoPi);
  std::vector<std::size_t> counts;
  for (const auto& recs : sweep2.records) counts.push_back(stable_count(recs));
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (sweep2.g_grid[i] < kPi - 0.01) CHECK(counts[i] == 2);
    if (sweep2.g_grid[i] > kPi + 0.01) CHECK(counts[i] == 4);
  }

  // eight stable period-4 points inside [3.445, 3.5]
  auto sweep4 = sweep_stability(4, 3.40, 3.50, 11, 0.0, kTwoPi);
  std::size_t best = 0;
  for (std::size_t i = 0; i < sweep4.records.size(); ++i)
    if (sweep4.g_grid[i] > 3.445 && sweep4.g_grid[i] < 3.5)
      best = std::max(best, stable_count(sweep4.records[i]));
  CHECK(best == 8);

  // a single stable root (pi) while the odd-pi points are stable
  auto sweep1 = sweep_stability(1, 0.5, 1.9, 8, 0.0, kTwoPi);
  for (const auto& recs : sweep1.records) CHECK(stable_count(recs) == 1);
}

TEST_CASE("stability boundaries") {
  CHECK(locate_stability_boundary(1, 1.5, 2.5, 0.0, kTwoPi) ==
        doctest::Approx(2.0).epsilon(1e-5));
  CHECK(locate_stability_boundary(2, 3.0, 3.3, 0.0, kTwoPi) ==
        doctest::Approx(kPi).epsilon(1e-4));
  CHECK(locate_stability_boundary(2, 3.4, 3.5, 0.0, kTwoPi) ==
        doctest::Approx(3.445).epsilon(0.005 / 3.445));
}

TEST_CASE("boundary requires a count change across the bracket") {
  CHECK_THROWS_AS(locate_stability_boundary(1, 0.5, 1.5, 0.0, kTwoPi),
                  BracketError);
}

TEST_CASE("roots of f are roots of every higher iterate") {
  for (double g : {1.5, 2.5, 3.3}) {
    auto r1 = find_fixed_points({g}, 1, 0.0, kTwoPi, {});
    auto r2 = find_fixed_points({g}, 2, 0.0, kTwoPi, {});
    for (const auto& r : r1) CHECK(has_root_near(r2, r.a, 1e-8));
  }
}

TEST_CASE("multiples of pi are exact roots for any gain") {
  for (double g : {0.3, 1.5, 4.62, 9.21}) {
    for (int k = 0; k < 4; ++k) {
      double a = k * kPi;
      CHECK(std::abs(iterate_n({g}, a, 3).value - a) < 1e-9);
    }
  }
}

TEST_CASE("multiplier is invariant under cyclic shift of the orbit") {
  MapParams p{3.3};
  auto recs = find_fixed_points(p, 2, 0.0, kTwoPi, {});
  for (const auto& r : recs) {
    double b = eval(p, r.a);
    double fwd[] = {r.a, b};
    double rot[] = {b, eval(p, b)};
    CHECK(multiplier_n(p, fwd) == doctest::Approx(multiplier_n(p, rot)).epsilon(1e-9));
  }
}

TEST_CASE("root set repeats one period up by 2*pi equivariance") {
  auto lower = find_fixed_points({2.5}, 2, 0.0, kTwoPi, {});
  auto upper = find_fixed_points({2.5}, 2, kTwoPi, 2 * kTwoPi, {});
  REQUIRE(lower.size() == upper.size());
  for (std::size_t i = 0; i < lower.size(); ++i) {
    CHECK(upper[i].a - kTwoPi == doctest::Approx(lower[i].a).epsilon(1e-8));
    CHECK(upper[i].stability == lower[i].stability);
  }
}

TEST_CASE("default grid doubles with the iterate order") {
  CHECK(default_root_grid(1) == 8192);
  CHECK(default_root_grid(4) == 8192);
  CHECK(default_root_grid(8) == 16384);
  CHECK(default_root_grid(16) == 32768);
}
