#include <filesystem>
#include <fstream>
#include <functional>
#include <map>

#include "procmap/scan.hpp"
#include "procmap/stability.hpp"
#include "procmap/windows.hpp"

namespace procmap {

namespace {

namespace fs = std::filesystem;

struct RecipeContext {
  fs::path dir;
  unsigned threads = 0;
  std::vector<std::string> written;

  std::ofstream open(const std::string& file) {
    fs::create_directories(dir);
    fs::path p = dir / file;
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open " + p.string());
    written.push_back(p.string());
    return os;
  }

  void scan(const std::string& file, const ScanGrid& grid,
            const std::string& command = "bifurcation") {
    ScanResult r = grid.ic.kind == IcPolicy::Kind::List &&
                           grid.ic.list.size() >= 2
                       ? multistability_scan(grid, threads)
                       : bifurcation_scan(grid, threads);
    r.command = command;
    auto os = open(file);
    write_scan(r, os);
  }

  void cobweb(const std::string& file, double g, double a0,
              std::uint64_t transient, std::uint64_t steps) {
    // discard the transient, then trace the settled motion
    double a = iterate_n({g}, a0, transient).value;
    auto pts = cobweb_trace({g}, a, steps);
    auto os = open(file);
    os << "x,y\n";
    for (const auto& p : pts)
      os << format_double(p[0]) << "," << format_double(p[1]) << "\n";
  }

  void fixed_point_sweep(const std::string& file, int n, double g_lo,
                         double g_hi, std::size_t steps) {
    auto sweep = sweep_stability(n, g_lo, g_hi, steps, 0.0, kTwoPi, {},
                                 threads);
    auto os = open(file);
    os << "g,a,multiplier,stability\n";
    for (std::size_t i = 0; i < sweep.g_grid.size(); ++i)
      for (const auto& r : sweep.records[i])
        os << format_double(sweep.g_grid[i]) << "," << format_double(r.a)
           << "," << format_double(r.multiplier) << ","
           << (r.stability == Stability::Stable
                   ? "stable"
                   : r.stability == Stability::Unstable ? "unstable"
                                                        : "neutral")
           << "\n";
  }

  void iterate_curves(const std::string& file, int stride, int n_max,
                      double g_lo, double g_hi, std::size_t steps) {
    // raw f^{L*n}(A*) per n, the curves behind the window conditions
    auto os = open(file);
    os << "g,n,value\n";
    for (std::size_t i = 0; i < steps; ++i) {
      double g = g_lo + (g_hi - g_lo) * static_cast<double>(i) /
                            static_cast<double>(steps - 1);
      double a = critical_points({g}).a1;
      for (int n = 1; n <= n_max; ++n) {
        for (int s = 0; s < stride; ++s) a = eval({g}, a);
        os << format_double(g) << "," << n << "," << format_double(a) << "\n";
      }
    }
  }

  void windows_csv(const std::string& file, const WindowPredicateSpec& spec,
                   double g_lo, double g_hi) {
    auto ws = find_windows(spec, g_lo, g_hi, 0, 1e-6, threads);
    auto os = open(file);
    os << "g_lo,g_hi,L,I,n_max,truncated\n";
    for (const auto& w : ws)
      os << format_double(w.g_lo) << "," << format_double(w.g_hi) << ","
         << spec.stride << "," << spec.half_index << "," << spec.n_max << ","
         << (w.truncated_lo || w.truncated_hi ? 1 : 0) << "\n";
  }

  void qcurve_csv(const std::string& file, int n, CriticalBranch branch,
                  double g_lo, double g_hi, std::size_t steps) {
    std::vector<double> grid(steps);
    for (std::size_t i = 0; i < steps; ++i)
      grid[i] = g_lo + (g_hi - g_lo) * static_cast<double>(i) /
                           static_cast<double>(steps - 1);
    QCurve q = q_curve(n, branch, grid);
    auto os = open(file);
    os << "g,value\n";
    for (std::size_t i = 0; i < steps; ++i)
      os << format_double(q.g[i]) << "," << format_double(q.values[i]) << "\n";
  }
};

ScanGrid base_grid(double g_lo, double g_hi, std::size_t steps,
                   Transform transform, double ic = kPi / 2) {
  ScanGrid grid;
  grid.g_lo = g_lo;
  grid.g_hi = g_hi;
  grid.g_steps = steps;
  grid.ic.kind = IcPolicy::Kind::Fixed;
  grid.ic.fixed = ic;
  grid.orbit.transient = 5000;
  grid.orbit.samples = 256;
  grid.transform = transform;
  return grid;
}

using RecipeFn = std::function<void(RecipeContext&)>;

const std::map<std::string, RecipeFn>& recipes() {
  static const std::map<std::string, RecipeFn> table = {
      {"fig1a",
       [](RecipeContext& c) {
         c.scan("fig1a.csv", base_grid(0.0, 6.0, 1200, Transform::Mod2Pi));
       }},
      {"fig1b",
       [](RecipeContext& c) {
         c.scan("fig1b.csv", base_grid(0.0, 6.0, 1200, Transform::SignedLog));
       }},
      {"fig3a",
       [](RecipeContext& c) {
         c.fixed_point_sweep("fig3a.csv", 2, 1.5, 3.5, 400);
       }},
      {"fig3b",
       [](RecipeContext& c) {
         c.fixed_point_sweep("fig3b.csv", 4, 1.5, 3.5, 400);
       }},
      {"fig4",
       [](RecipeContext& c) {
         ScanGrid grid = base_grid(0.0, 4.6, 1000, Transform::Mod2Pi);
         grid.ic.kind = IcPolicy::Kind::List;
         grid.ic.list = {kPi / 2 - 0.2, kPi / 2};
         c.scan("fig4.csv", grid, "multistability");
       }},
      {"fig6",
       [](RecipeContext& c) {
         c.cobweb("fig6_cobweb.csv", 4.62, kPi / 2, 0, 2000);
         c.scan("fig6_timeseries.csv",
                base_grid(4.62, 4.62, 1, Transform::Raw));
       }},
      {"fig7",
       [](RecipeContext& c) {
         ScanGrid grid = base_grid(4.6, 7.2, 1300, Transform::SignedLog);
         grid.ic.kind = IcPolicy::Kind::RandomPerG;
         grid.orbit.seed = 1;
         c.scan("fig7a.csv", grid);
         grid.transform = Transform::Mod2Pi;
         c.scan("fig7b.csv", grid);
       }},
      {"fig9",
       [](RecipeContext& c) {
         c.cobweb("fig9a_cobweb.csv", 6.7332, kPi / 2, 2000, 500);
         ScanGrid grid = base_grid(6.7332, 6.7332, 1, Transform::Mod2Pi);
         c.scan("fig9b_mod2pi.csv", grid);
         c.cobweb("fig9c_cobweb.csv", 6.8832, kPi / 2, 2000, 500);
         grid = base_grid(6.8832, 6.8832, 1, Transform::Mod2Pi);
         c.scan("fig9d_mod2pi.csv", grid);
       }},
      {"fig10",
       [](RecipeContext& c) {
         ScanGrid grid =
             base_grid(kTwoPi - 0.3, kTwoPi + 0.5, 800, Transform::Mod2Pi);
         grid.ic.kind = IcPolicy::Kind::RandomPerG;
         grid.orbit.seed = 1;
         c.scan("fig10a.csv", grid);
         grid.ic.kind = IcPolicy::Kind::Fixed;
         grid.ic.fixed = kPi / 2;
         c.scan("fig10b.csv", grid);
         grid.ic.fixed = 3 * kPi / 2;
         c.scan("fig10c.csv", grid);
       }},
      {"fig13",
       [](RecipeContext& c) {
         ScanGrid grid = base_grid(9.0, 9.8, 800, Transform::Raw);
         grid.orbit.transient = 20000;
         c.scan("fig13.csv", grid);
       }},
      {"fig14",
       [](RecipeContext& c) {
         c.iterate_curves("fig14a.csv", 1, 3, 8.5, 16.5, 4000);
         c.iterate_curves("fig14b.csv", 1, 20, 9.0, 10.0, 2000);
         c.iterate_curves("fig14c.csv", 1, 20, 15.5, 16.0, 2000);
       }},
      {"fig16",
       [](RecipeContext& c) {
         c.scan("fig16.csv", base_grid(4.6, kTwoPi, 2000, Transform::Mod2Pi));
       }},
      {"fig17",
       [](RecipeContext& c) {
         const std::pair<const char*, double> cases[] = {
             {"fig17a_cobweb.csv", 4.915},  {"fig17b_cobweb.csv", 5.39},
             {"fig17c_cobweb.csv", 5.5835}, {"fig17d_cobweb.csv", 5.6845},
             {"fig17e_cobweb.csv", 5.805},  {"fig17f_cobweb.csv", 5.921}};
         for (const auto& [file, g] : cases)
           c.cobweb(file, g, kPi / 2, 5000, 400);
       }},
      {"fig18",
       [](RecipeContext& c) {
         ScanGrid grid = base_grid(4.91, 4.95, 800, Transform::SignedLog, 1.73);
         c.scan("fig18a.csv", grid);
         grid.transform = Transform::Mod2Pi;
         c.scan("fig18b.csv", grid);
       }},
      {"fig19",
       [](RecipeContext& c) {
         c.windows_csv("fig19b_windows.csv", {2, 1, 24, CriticalBranch::A1},
                       5.3, 5.5);
         c.windows_csv("fig19c_windows.csv", {3, 1, 24, CriticalBranch::A1},
                       5.6, 5.7);
         c.windows_csv("fig19d_windows.csv", {3, 2, 24, CriticalBranch::A1},
                       5.9, 5.95);
       }},
      {"fig20",
       [](RecipeContext& c) {
         c.scan("fig20_bifurcation.csv",
                base_grid(4.6, kTwoPi, 2000, Transform::Mod2Pi));
         const std::pair<const char*, std::pair<int, CriticalBranch>> qs[] = {
             {"fig20_q1_a1.csv", {1, CriticalBranch::A1}},
             {"fig20_q2_a1.csv", {2, CriticalBranch::A1}},
             {"fig20_q1_a2.csv", {1, CriticalBranch::A2}},
             {"fig20_q2_a2.csv", {2, CriticalBranch::A2}}};
         for (const auto& [file, spec] : qs)
           c.qcurve_csv(file, spec.first, spec.second, 4.6, kTwoPi, 2000);
       }},
  };
  return table;
}

}  // namespace

std::vector<std::string> recipe_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : recipes()) names.push_back(name);
  return names;
}

std::vector<std::string> run_recipe(const std::string& name,
                                    const std::string& out_dir,
                                    unsigned threads) {
  auto it = recipes().find(name);
  if (it == recipes().end()) {
    std::string msg = "unknown recipe '" + name + "'; available:";
    for (const auto& n : recipe_names()) msg += " " + n;
    throw UnknownRecipeError(msg);
  }
  RecipeContext ctx;
  ctx.dir = out_dir;
  ctx.threads = threads;
  it->second(ctx);
  return ctx.written;
}

}  // namespace procmap
