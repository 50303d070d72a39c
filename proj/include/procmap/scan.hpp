#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "procmap/orbit.hpp"

namespace procmap {

inline constexpr const char* kVersion = "0.1.0";

enum class Transform { Raw, Mod2Pi, SignedLog };

const char* to_string(Transform t) noexcept;

struct IcPolicy {
  enum class Kind { Fixed, RandomPerG, List };
  Kind kind = Kind::Fixed;
  double fixed = kPi / 2;
  std::vector<double> list;
};

struct ScanGrid {
  double g_lo = 0.0;
  double g_hi = 0.0;
  std::size_t g_steps = 1;
  IcPolicy ic;
  OrbitSettings orbit;
  Transform transform = Transform::Raw;
};

struct OrbitScanEntry {
  double g = 0.0;
  double ic = 0.0;
  std::vector<double> values;  // transformed samples
  OrbitStatus status = OrbitStatus::Completed;
  std::uint64_t escape_step = 0;
  BehaviorLabel label;
};

struct ScanResult {
  ScanGrid grid;
  std::string command;  // echoed into output metadata
  std::vector<OrbitScanEntry> entries;  // grid order: g-major, then IC
};

/// One orbit per (g, initial condition) grid point, transformed and
/// classified. Deterministic for a fixed grid and seed regardless of the
/// thread count; entries come back in grid order.
ScanResult bifurcation_scan(const ScanGrid& grid, unsigned threads = 0);

/// bifurcation_scan restricted to an explicit IC list of two or more values,
/// one labeled sub-scan per initial condition.
ScanResult multistability_scan(const ScanGrid& grid, unsigned threads = 0);

enum class OutputFormat { Csv, Ndjson };

/// Header `g,ic,sample_index,value,status,label,seed` preceded by `#` metadata
/// lines. Floats use the shortest round-trip representation; escaped orbits
/// carry `escaped:<step>` in the status column.
void write_scan(const ScanResult& r, std::ostream& os,
                OutputFormat format = OutputFormat::Csv);

std::string scan_to_string(const ScanResult& r,
                           OutputFormat format = OutputFormat::Csv);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Deterministic per-index initial condition in [0, 2*pi) for the RandomPerG
/// policy (splitmix64 of seed and index).
double random_ic(std::uint64_t seed, std::uint64_t index) noexcept;

struct UnknownRecipeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Named reproduction recipes; each writes one or more CSVs under out_dir and
/// returns their paths. Throws UnknownRecipeError (message lists the known
/// names) for an unknown name.
std::vector<std::string> run_recipe(const std::string& name,
                                    const std::string& out_dir,
                                    unsigned threads = 0);

std::vector<std::string> recipe_names();

}  // namespace procmap
