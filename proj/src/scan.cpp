#include "procmap/scan.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "procmap/parallel.hpp"

namespace procmap {

const char* to_string(Transform t) noexcept {
  switch (t) {
    case Transform::Raw: return "raw";
    case Transform::Mod2Pi: return "mod2pi";
    case Transform::SignedLog: return "signedlog";
  }
  return "unknown";
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

double random_ic(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 over seed and grid index; stable across thread counts
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  // 53-bit mantissa to [0, 1), scaled to one sine period
  return kTwoPi * (static_cast<double>(z >> 11) * 0x1.0p-53);
}

namespace {

std::vector<double> apply_transform(const OrbitRecord& o, Transform t) {
  switch (t) {
    case Transform::Raw: return o.raw;
    case Transform::Mod2Pi: return mod_reduce(o);
    case Transform::SignedLog: return signed_log(o);
  }
  return o.raw;
}

std::vector<double> ics_for(const ScanGrid& grid, std::size_t g_index) {
  switch (grid.ic.kind) {
    case IcPolicy::Kind::Fixed: return {grid.ic.fixed};
    case IcPolicy::Kind::RandomPerG:
      return {random_ic(grid.orbit.seed, g_index)};
    case IcPolicy::Kind::List: return grid.ic.list;
  }
  return {grid.ic.fixed};
}

}  // namespace

ScanResult bifurcation_scan(const ScanGrid& grid, unsigned threads) {
  if (grid.g_steps < 1) throw std::invalid_argument("scan: g_steps >= 1");
  if (!(grid.g_lo <= grid.g_hi))
    throw std::invalid_argument("scan: g_lo <= g_hi");
  if (grid.ic.kind == IcPolicy::Kind::List && grid.ic.list.empty())
    throw std::invalid_argument("scan: empty initial-condition list");

  ScanResult result;
  result.grid = grid;
  result.command = "bifurcation";

  const std::size_t per_g =
      grid.ic.kind == IcPolicy::Kind::List ? grid.ic.list.size() : 1;
  result.entries.resize(grid.g_steps * per_g);
  parallel_for(grid.g_steps, threads, [&](std::size_t i) {
    double g = grid.g_steps == 1
                   ? grid.g_lo
                   : grid.g_lo + (grid.g_hi - grid.g_lo) *
                                     static_cast<double>(i) /
                                     static_cast<double>(grid.g_steps - 1);
    auto ics = ics_for(grid, i);
    for (std::size_t j = 0; j < ics.size(); ++j) {
      OrbitRecord o = run_orbit({g}, ics[j], grid.orbit);
      OrbitScanEntry& e = result.entries[i * per_g + j];
      e.g = g;
      e.ic = ics[j];
      e.values = apply_transform(o, grid.transform);
      e.status = o.status;
      e.escape_step = o.escape_step;
      e.label = classify(o);
    }
  });
  return result;
}

ScanResult multistability_scan(const ScanGrid& grid, unsigned threads) {
  if (grid.ic.kind != IcPolicy::Kind::List || grid.ic.list.size() < 2)
    throw std::invalid_argument(
        "multistability_scan: needs an IC list of two or more values");
  ScanResult r = bifurcation_scan(grid, threads);
  r.command = "multistability";
  return r;
}

namespace {

void write_metadata(const ScanResult& r, std::ostream& os) {
  const ScanGrid& g = r.grid;
  os << "# procmap=" << kVersion << "\n";
  os << "# command=" << r.command << "\n";
  os << "# g_lo=" << format_double(g.g_lo) << " g_hi=" << format_double(g.g_hi)
     << " g_steps=" << g.g_steps << "\n";
  os << "# ic_policy=";
  switch (g.ic.kind) {
    case IcPolicy::Kind::Fixed:
      os << "fixed ic=" << format_double(g.ic.fixed);
      break;
    case IcPolicy::Kind::RandomPerG:
      os << "random";
      break;
    case IcPolicy::Kind::List: {
      os << "list ics=";
      for (std::size_t i = 0; i < g.ic.list.size(); ++i)
        os << (i ? "," : "") << format_double(g.ic.list[i]);
      break;
    }
  }
  os << "\n";
  os << "# transient=" << g.orbit.transient << " samples=" << g.orbit.samples
     << " escape_bound=" << format_double(g.orbit.escape_bound)
     << " seed=" << g.orbit.seed << "\n";
  os << "# transform=" << to_string(g.transform) << "\n";
}

void write_csv(const ScanResult& r, std::ostream& os) {
  write_metadata(r, os);
  os << "g,ic,sample_index,value,status,label,seed\n";
  const std::uint64_t seed = r.grid.orbit.seed;
  for (const auto& e : r.entries) {
    std::string status = e.status == OrbitStatus::Escaped
                             ? "escaped:" + std::to_string(e.escape_step)
                             : "completed";
    std::string prefix = format_double(e.g) + "," + format_double(e.ic) + ",";
    std::string suffix =
        "," + status + "," + label_string(e.label) + "," + std::to_string(seed);
    if (e.values.empty()) {
      // escaped before recording anything: keep one status row, empty value
      os << prefix << "0," << suffix << "\n";
      continue;
    }
    for (std::size_t s = 0; s < e.values.size(); ++s)
      os << prefix << s << "," << format_double(e.values[s]) << suffix << "\n";
  }
}

void write_ndjson(const ScanResult& r, std::ostream& os) {
  const std::uint64_t seed = r.grid.orbit.seed;
  for (const auto& e : r.entries) {
    std::string common = "\"g\":" + format_double(e.g) +
                         ",\"ic\":" + format_double(e.ic);
    std::string status =
        e.status == OrbitStatus::Escaped
            ? "\"escaped\",\"escape_step\":" + std::to_string(e.escape_step)
            : "\"completed\"";
    std::string tail = ",\"status\":" + status + ",\"label\":\"" +
                       label_string(e.label) +
                       "\",\"seed\":" + std::to_string(seed) + "}";
    if (e.values.empty()) {
      os << "{" << common << ",\"sample_index\":0,\"value\":null" << tail
         << "\n";
      continue;
    }
    for (std::size_t s = 0; s < e.values.size(); ++s)
      os << "{" << common << ",\"sample_index\":" << s
         << ",\"value\":" << format_double(e.values[s]) << tail << "\n";
  }
}

}  // namespace

void write_scan(const ScanResult& r, std::ostream& os, OutputFormat format) {
  if (format == OutputFormat::Csv)
    write_csv(r, os);
  else
    write_ndjson(r, os);
}

std::string scan_to_string(const ScanResult& r, OutputFormat format) {
  std::ostringstream os;
  write_scan(r, os, format);
  return os.str();
}

}  // namespace procmap
