#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sqgol/classify.hpp"
#include "sqgol/io.hpp"
#include "sqgol/statistics.hpp"
#include "sqgol/sweep.hpp"

namespace sqgol {

/// Invalid configuration; what() names the offending key.
class ConfigError : public Error {
 public:
  ConfigError(std::string key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct ConfigEntry {
  std::string key;
  std::string value;
  std::string origin;  // "file:line" or "command line"
};

/// Flat "key = value" text; blank lines and '#' comments are ignored.
std::vector<ConfigEntry> read_config(std::istream& is, const std::string& source = "<config>");
std::vector<ConfigEntry> load_config_file(const std::filesystem::path& path);

/// Parses "key=value" tokens (e.g. command-line overrides).
std::vector<ConfigEntry> parse_overrides(const std::vector<std::string>& args);

enum class SeedKind { kRandom, kQutub, kPattern };

/// A single-universe run. Keys (defaults in brackets):
///   size=WxH [100x100]   precision=single|double [double]
///   summation=row_major|sorted [row_major]   gens=N [2000]
///   seed=random|qutub|pattern [random]
///     random:  f [0.2], rng_seed [1]
///     qutub:   a (all corners), a1 a2 a3 a4 (override individual corners)
///     pattern: pattern=<file>, x y (top-left; centered when omitted)
///   stop_on_outcome=true|false [false]   stop when the classifier resolves
///   burn_in [500]   settle_window [50]   settle_tolerance [0 = automatic]
///   cloud_window [200]   census_tolerance [0.01]   symmetry=true|false
///   frames=<prefix> frame_every=K [1]   series=<csv>
///   dump=<path> dump_format=text|binary [text]
struct RunConfig {
  int width = 100;
  int height = 100;
  Precision precision = Precision::kDouble;
  Summation summation = Summation::kRowMajor;
  std::size_t generations = 2000;

  SeedKind seed = SeedKind::kRandom;
  double fraction = 0.2;
  std::uint64_t rng_seed = 1;
  double corners[4] = {0.5, 0.5, 0.5, 0.5};
  std::string pattern_path;
  std::optional<long long> pattern_x;
  std::optional<long long> pattern_y;

  bool stop_on_outcome = false;
  std::size_t burn_in = 500;
  ClassifierLimits limits;
  double census_tolerance = 0.01;
  bool track_symmetry = false;

  std::string frames_prefix;
  std::size_t frame_every = 1;
  std::string series_path;
  std::string dump_path;
  StateFormat dump_format = StateFormat::kText;

  /// Checks the cross-key invariants (one seeding source, distinct outputs).
  void validate() const;
};

/// Applies entries in order (later entries override earlier ones).
RunConfig parse_run_config(const std::vector<ConfigEntry>& entries);

struct RunReport {
  Outcome outcome;
  std::string patterns;  // census of the final state (settled outcomes only)
  LivenessSeries series;
  std::optional<SteadyStateStats> steady;
  std::size_t generations_run = 0;
  std::optional<std::size_t> first_asymmetric_generation;
  double max_symmetry_defect = 0.0;
  std::uint64_t final_fingerprint = 0;
};

/// Builds the initial universe, evolves it and writes the requested
/// artifacts. Frames are named <prefix><generation, 6 digits>.pgm.
RunReport run_experiment(const RunConfig& cfg);

/// Human-readable summary printed by the CLI.
void print_report(std::ostream& os, const RunReport& report);

/// A parameter sweep. Keys:
///   level=coarse|fine|finest   or   a14=lo:hi:step  a23=lo:hi:step
///   size=WxH [100x100]   precision [double]   summation [row_major]
///   gens [2000]   settle_window   settle_tolerance   cloud_window
///   census_tolerance [0.01]   workers [0 = automatic]
///   compare_precision=true|false [false]
///   csv=<path>   image=<ppm path>   (single-precision copies get ".single"
///   inserted before the extension under compare_precision)
struct SweepConfig {
  SweepSpec spec;
  bool compare_precision = false;
  std::string csv_path;
  std::string image_path;
};

SweepConfig parse_sweep_config(const std::vector<ConfigEntry>& entries);

}  // namespace sqgol
