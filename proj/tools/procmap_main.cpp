// Command-line front end; links only the public C API.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "procmap.h"

namespace {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 0;
};

Range parse_range(const std::string& s, bool want_steps) {
  Range r;
  std::istringstream is(s);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(is, part, ':')) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3)
    throw CLI::ValidationError("range", "expected LO:HI" +
                                            std::string(want_steps ? "[:STEPS]" : ""));
  r.lo = std::stod(parts[0]);
  r.hi = std::stod(parts[1]);
  if (parts.size() == 3) r.steps = std::stoul(parts[2]);
  return r;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
  return file;
}

int report(procmap_status s) {
  if (s == PROCMAP_OK) return 0;
  std::cerr << "error: status=" << procmap_status_name(s)
            << " message=" << procmap_last_error() << "\n";
  return 2;
}

const char* stability_name(int s) {
  switch (s) {
    case PROCMAP_STABLE: return "stable";
    case PROCMAP_UNSTABLE: return "unstable";
    default: return "neutral";
  }
}

struct OrbitDeleter {
  void operator()(procmap_orbit* o) const { procmap_orbit_free(o); }
};
using OrbitPtr = std::unique_ptr<procmap_orbit, OrbitDeleter>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical laboratory for the map A -> A + g*sin(A)"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file mirroring the flags");
  app.set_version_flag("--version", procmap_version());

  // shared option storage
  double g = 0.0, ic = 1.5707963267948966;
  std::string g_range, out_path, transform = "mod2pi", format = "csv";
  std::uint64_t transient = 5000, samples = 4096, steps = 100;
  double escape_bound = 0.0;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool ic_random = false;
  std::vector<double> ic_list;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads,
                    "worker threads (default: PROCMAP_THREADS or all cores)");
  };

  // iterate
  auto* cmd_iterate = app.add_subcommand("iterate", "print successive iterates");
  cmd_iterate->add_option("--g", g, "coupling constant")->required();
  cmd_iterate->add_option("--ic", ic, "initial condition (default pi/2)");
  cmd_iterate->add_option("--steps", steps, "iterations to print");
  cmd_iterate->add_option("--escape-bound", escape_bound, "escape threshold");
  cmd_iterate->add_option("--out", out_path, "output file (default stdout)");

  // cobweb
  auto* cmd_cobweb = app.add_subcommand("cobweb", "staircase trace of an orbit");
  cmd_cobweb->add_option("--g", g, "coupling constant")->required();
  cmd_cobweb->add_option("--ic", ic, "initial condition (default pi/2)");
  cmd_cobweb->add_option("--steps", steps, "orbit steps to trace");
  cmd_cobweb->add_option("--out", out_path, "output file (default stdout)");

  // bifurcation
  auto* cmd_bif = app.add_subcommand(
      "bifurcation", "orbit samples and behavior labels over a g grid");
  cmd_bif->add_option("--g-range", g_range, "LO:HI:STEPS")->required();
  cmd_bif->add_option("--ic", ic_list,
                      "initial condition(s); two or more runs a "
                      "multistability overlay");
  cmd_bif->add_flag("--ic-random", ic_random, "random IC per g (seeded)");
  cmd_bif->add_option("--seed", seed, "seed for random ICs");
  cmd_bif->add_option("--transient", transient, "discarded iterations");
  cmd_bif->add_option("--samples", samples, "recorded iterations");
  cmd_bif->add_option("--escape-bound", escape_bound, "escape threshold");
  cmd_bif->add_option("--transform", transform, "raw | mod2pi | signedlog");
  cmd_bif->add_option("--format", format, "csv | ndjson");
  cmd_bif->add_option("--out", out_path, "output file (default stdout)");
  add_common(cmd_bif);

  // fixed-points
  std::string interval = "0:6.283185307179586";
  int iterate_order = 1;
  std::size_t root_grid = 0;
  auto* cmd_fp =
      app.add_subcommand("fixed-points", "roots of f^n(A) - A with stability");
  cmd_fp->add_option("--g", g, "coupling constant")->required();
  cmd_fp->add_option("--n", iterate_order, "iterate order");
  cmd_fp->add_option("--interval", interval, "LO:HI scan interval in A");
  cmd_fp->add_option("--grid", root_grid, "bracketing grid points");
  cmd_fp->add_option("--out", out_path, "output file (default stdout)");

  // sweep-stability
  auto* cmd_sweep = app.add_subcommand(
      "sweep-stability", "fixed points of f^n across a g grid");
  cmd_sweep->add_option("--n", iterate_order, "iterate order");
  cmd_sweep->add_option("--g-range", g_range, "LO:HI:STEPS")->required();
  cmd_sweep->add_option("--interval", interval, "LO:HI scan interval in A");
  cmd_sweep->add_option("--grid", root_grid, "bracketing grid points");
  cmd_sweep->add_option("--out", out_path, "output file (default stdout)");

  // thresholds
  bool want_bios = false;
  int ballistic_k = 0;
  auto* cmd_thr =
      app.add_subcommand("thresholds", "bifurcation threshold solvers");
  cmd_thr->add_flag("--bios", want_bios, "gain of the onset of bios");
  cmd_thr->add_option("--ballistic", ballistic_k,
                      "k-th ballistic window onset (g = 2*k*pi)");

  // windows
  int win_L = 1, win_I = 1, win_nmax = 20;
  std::string critical = "A1";
  std::size_t win_grid = 0;
  auto* cmd_win = app.add_subcommand(
      "windows", "periodic-window intervals from critical-point iterates");
  cmd_win->add_option("--L", win_L, "iterate stride");
  cmd_win->add_option("--I", win_I, "half-period index");
  cmd_win->add_option("--n-max", win_nmax, "conditions checked");
  cmd_win->add_option("--critical", critical, "A1 | A2");
  cmd_win->add_option("--g-range", g_range, "LO:HI")->required();
  cmd_win->add_option("--grid", win_grid, "predicate grid points");
  cmd_win->add_option("--out", out_path, "output file (default stdout)");
  add_common(cmd_win);

  // lstep
  std::optional<double> lstep_a, lstep_g;
  std::string lstep_g_range, lstep_a_range;
  auto* cmd_lstep = app.add_subcommand(
      "lstep", "solve the L-step recurrence condition f^L(A)-A = 2*pi");
  cmd_lstep->add_option("--L", win_L, "step count")->required();
  cmd_lstep->add_option("--a", lstep_a, "solve for g at this state");
  cmd_lstep->add_option("--solve-a", lstep_g, "solve for the state at this g");
  cmd_lstep->add_option("--g-range", lstep_g_range, "LO:HI bracket for g");
  cmd_lstep->add_option("--a-range", lstep_a_range, "LO:HI bracket for A");

  // qcurves
  auto* cmd_q = app.add_subcommand(
      "qcurves", "mod-2*pi trace of iterated critical points over g");
  cmd_q->add_option("--n", iterate_order, "iterate order");
  cmd_q->add_option("--critical", critical, "A1 | A2");
  cmd_q->add_option("--g-range", g_range, "LO:HI:STEPS")->required();
  cmd_q->add_option("--out", out_path, "output file (default stdout)");

  // classify
  auto* cmd_cls =
      app.add_subcommand("classify", "behavior label for a single orbit");
  cmd_cls->add_option("--g", g, "coupling constant")->required();
  cmd_cls->add_option("--ic", ic, "initial condition (default pi/2)");
  cmd_cls->add_option("--transient", transient, "discarded iterations");
  cmd_cls->add_option("--samples", samples, "recorded iterations");
  cmd_cls->add_option("--escape-bound", escape_bound, "escape threshold");

  // recipe
  std::string recipe_name, out_dir = ".";
  auto* cmd_recipe =
      app.add_subcommand("recipe", "write the CSVs for a named figure recipe");
  cmd_recipe->add_option("name", recipe_name, "recipe name")->required();
  cmd_recipe->add_option("--out-dir", out_dir, "output directory");
  add_common(cmd_recipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors exit 1
  }

  try {
    if (cmd_iterate->parsed()) {
      procmap_orbit_settings s{0, samples, escape_bound, seed};
      s.samples = steps;
      procmap_orbit* raw = nullptr;
      if (int rc = report(procmap_orbit_run(g, ic, &s, &raw))) return rc;
      OrbitPtr orbit(raw);
      std::ofstream file;
      auto& os = open_out(file, out_path);
      os << "t,value\n";
      os.precision(17);
      const double* v = procmap_orbit_samples(orbit.get());
      for (std::uint64_t t = 0; t < procmap_orbit_length(orbit.get()); ++t)
        os << (t + 1) << "," << v[t] << "\n";
      std::uint64_t esc = 0;
      if (procmap_orbit_escaped(orbit.get(), &esc))
        os << "# escaped at step " << esc << "\n";
      return 0;
    }

    if (cmd_cobweb->parsed()) {
      std::vector<double> xy(2 * (2 * steps + 1));
      std::uint64_t count = 0;
      if (int rc = report(procmap_cobweb(g, ic, steps, escape_bound, xy.data(),
                                         &count)))
        return rc;
      std::ofstream file;
      auto& os = open_out(file, out_path);
      os << "x,y\n";
      os.precision(17);
      for (std::uint64_t i = 0; i < count; ++i)
        os << xy[2 * i] << "," << xy[2 * i + 1] << "\n";
      return 0;
    }

    if (cmd_bif->parsed()) {
      Range r = parse_range(g_range, true);
      if (r.steps == 0) throw CLI::ValidationError("--g-range", "STEPS required");
      procmap_scan_config cfg{};
      cfg.g_lo = r.lo;
      cfg.g_hi = r.hi;
      cfg.g_steps = r.steps;
      if (ic_random) {
        cfg.ic_policy = PROCMAP_IC_RANDOM;
      } else if (ic_list.size() >= 2) {
        cfg.ic_policy = PROCMAP_IC_LIST;
        cfg.ic_list = ic_list.data();
        cfg.ic_count = ic_list.size();
      } else {
        cfg.ic_policy = PROCMAP_IC_FIXED;
        cfg.ic_fixed = ic_list.empty() ? ic : ic_list.front();
      }
      cfg.orbit = {transient, samples, escape_bound, seed};
      cfg.transform = transform == "raw"       ? PROCMAP_TRANSFORM_RAW
                      : transform == "signedlog" ? PROCMAP_TRANSFORM_SIGNEDLOG
                                                 : PROCMAP_TRANSFORM_MOD2PI;
      cfg.format =
          format == "ndjson" ? PROCMAP_FORMAT_NDJSON : PROCMAP_FORMAT_CSV;
      cfg.threads = threads;
      return report(procmap_scan_to_file(
          &cfg, out_path.empty() ? "-" : out_path.c_str()));
    }

    if (cmd_fp->parsed() || cmd_sweep->parsed()) {
      Range a_iv = parse_range(interval, false);
      std::ofstream file;
      auto& os = open_out(file, out_path);
      os << "g,a,multiplier,stability\n";
      os.precision(17);
      auto emit = [&](double gv) -> int {
        procmap_fixed_point_list* list = nullptr;
        if (int rc = report(procmap_find_fixed_points(
                gv, iterate_order, a_iv.lo, a_iv.hi, root_grid, &list)))
          return rc;
        for (std::size_t i = 0; i < procmap_fixed_point_count(list); ++i) {
          procmap_fixed_point fp{};
          procmap_fixed_point_get(list, i, &fp);
          os << gv << "," << fp.a << "," << fp.multiplier << ","
             << stability_name(fp.stability) << "\n";
        }
        procmap_fixed_point_list_free(list);
        return 0;
      };
      if (cmd_fp->parsed()) return emit(g);
      Range r = parse_range(g_range, true);
      if (r.steps < 2) throw CLI::ValidationError("--g-range", "STEPS >= 2");
      for (std::size_t i = 0; i < r.steps; ++i) {
        double gv = r.lo + (r.hi - r.lo) * static_cast<double>(i) /
                               static_cast<double>(r.steps - 1);
        if (int rc = emit(gv)) return rc;
      }
      return 0;
    }

    if (cmd_thr->parsed()) {
      if (!want_bios && ballistic_k == 0)
        throw CLI::ValidationError("thresholds",
                                   "pass --bios and/or --ballistic K");
      std::cout.precision(17);
      if (want_bios) {
        double gv = 0, a = 0, res = 0;
        if (int rc = report(procmap_bios_onset(&gv, &a, &res))) return rc;
        std::cout << "bios-onset g=" << gv << " a=" << a
                  << " residual=" << res << "\n";
      }
      if (ballistic_k > 0) {
        double gv = 0, a = 0;
        if (int rc = report(procmap_ballistic_onset(ballistic_k, &gv, &a)))
          return rc;
        std::cout << "ballistic-onset k=" << ballistic_k << " g=" << gv
                  << " a=" << a << "\n";
      }
      return 0;
    }

    if (cmd_win->parsed()) {
      Range r = parse_range(g_range, false);
      int which =
          critical == "A2" ? PROCMAP_CRITICAL_A2 : PROCMAP_CRITICAL_A1;
      std::vector<procmap_window> ws(256);
      std::size_t count = 0;
      if (int rc = report(procmap_find_windows(win_L, win_I, win_nmax, which,
                                               r.lo, r.hi, win_grid, threads,
                                               ws.data(), ws.size(), &count)))
        return rc;
      std::ofstream file;
      auto& os = open_out(file, out_path);
      os << "g_lo,g_hi,truncated\n";
      os.precision(17);
      for (std::size_t i = 0; i < count && i < ws.size(); ++i)
        os << ws[i].g_lo << "," << ws[i].g_hi << "," << ws[i].truncated << "\n";
      return 0;
    }

    if (cmd_lstep->parsed()) {
      if (lstep_a.has_value() == lstep_g.has_value())
        throw CLI::ValidationError("lstep", "pass exactly one of --a, --solve-a");
      std::cout.precision(17);
      if (lstep_a) {
        Range r{0, 0, 0};
        if (!lstep_g_range.empty()) r = parse_range(lstep_g_range, false);
        double gv = 0, res = 0;
        if (int rc = report(procmap_lstep_solve_g(win_L, *lstep_a, r.lo, r.hi,
                                                  &gv, &res)))
          return rc;
        std::cout << "lstep L=" << win_L << " a=" << *lstep_a << " g=" << gv
                  << " residual=" << res << "\n";
      } else {
        Range r{0, 0, 0};
        if (!lstep_a_range.empty()) r = parse_range(lstep_a_range, false);
        double a = 0, res = 0;
        if (int rc = report(procmap_lstep_solve_a(win_L, *lstep_g, r.lo, r.hi,
                                                  &a, &res)))
          return rc;
        std::cout << "lstep L=" << win_L << " g=" << *lstep_g << " a=" << a
                  << " residual=" << res << "\n";
      }
      return 0;
    }

    if (cmd_q->parsed()) {
      Range r = parse_range(g_range, true);
      if (r.steps < 2) throw CLI::ValidationError("--g-range", "STEPS >= 2");
      std::vector<double> gs(r.steps), vals(r.steps);
      for (std::size_t i = 0; i < r.steps; ++i)
        gs[i] = r.lo + (r.hi - r.lo) * static_cast<double>(i) /
                           static_cast<double>(r.steps - 1);
      int which =
          critical == "A2" ? PROCMAP_CRITICAL_A2 : PROCMAP_CRITICAL_A1;
      if (int rc = report(procmap_qcurve(iterate_order, which, gs.data(),
                                         gs.size(), vals.data())))
        return rc;
      std::ofstream file;
      auto& os = open_out(file, out_path);
      os << "g,value\n";
      os.precision(17);
      for (std::size_t i = 0; i < r.steps; ++i)
        os << gs[i] << "," << vals[i] << "\n";
      return 0;
    }

    if (cmd_cls->parsed()) {
      procmap_orbit_settings s{transient, samples, escape_bound, seed};
      procmap_orbit* raw = nullptr;
      if (int rc = report(procmap_orbit_run(g, ic, &s, &raw))) return rc;
      OrbitPtr orbit(raw);
      procmap_behavior b{};
      if (int rc = report(procmap_orbit_classify(orbit.get(), &b))) return rc;
      char label[64];
      procmap_behavior_label(&b, label, sizeof label);
      std::cout.precision(17);
      std::cout << "label=" << label << "\n"
                << "drift=" << b.drift << " range=" << b.range
                << " sign_consistency=" << b.sign_consistency
                << " periodic_residual=" << b.periodic_residual << "\n";
      return 0;
    }

    if (cmd_recipe->parsed()) {
      return report(procmap_recipe_run(recipe_name.c_str(), out_dir.c_str(),
                                       threads));
    }
  } catch (const CLI::Error& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: status=invalid-argument message=" << e.what() << "\n";
    return 1;
  }
  return 0;
}
