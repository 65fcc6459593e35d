#include "sqgol/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <set>

#include "sqgol/matching.hpp"
#include "sqgol/pattern.hpp"
#include "sqgol/seeding.hpp"

namespace sqgol {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(const ConfigEntry& e, const std::string& what) {
  throw ConfigError(e.key, what + " (got '" + e.value + "', " + e.origin + ")");
}

template <class V>
V number(const ConfigEntry& e, const char* expected) {
  V v{};
  const auto* end = e.value.data() + e.value.size();
  const auto res = std::from_chars(e.value.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) fail(e, std::string("expected ") + expected);
  return v;
}

double real(const ConfigEntry& e) {
  const double v = number<double>(e, "a number");
  if (!std::isfinite(v)) fail(e, "expected a finite number");
  return v;
}

double amplitude(const ConfigEntry& e) {
  const double v = real(e);
  if (!(v >= 0.0 && v <= 1.0)) fail(e, "expected a value in [0,1]");
  return v;
}

std::size_t count(const ConfigEntry& e) {
  return number<std::size_t>(e, "a non-negative integer");
}

bool boolean(const ConfigEntry& e) {
  if (e.value == "true" || e.value == "1" || e.value == "yes" || e.value == "on") return true;
  if (e.value == "false" || e.value == "0" || e.value == "no" || e.value == "off") return false;
  fail(e, "expected true|false");
}

void size(const ConfigEntry& e, int& w, int& h) {
  const auto x = e.value.find('x');
  if (x == std::string::npos) fail(e, "expected WxH");
  const ConfigEntry we{e.key, e.value.substr(0, x), e.origin};
  const ConfigEntry he{e.key, e.value.substr(x + 1), e.origin};
  w = number<int>(we, "WxH");
  h = number<int>(he, "WxH");
  if (w < 3 || h < 3) fail(e, "both dimensions must be at least 3");
}

template <class F>
auto wrapped(const ConfigEntry& e, F&& parse) {
  try {
    return parse(e.value);
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& err) {
    fail(e, err.what());
  }
}

LatticeRange lattice(const ConfigEntry& e) {
  const auto c1 = e.value.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : e.value.find(':', c1 + 1);
  if (c2 == std::string::npos) fail(e, "expected lo:hi:step");
  LatticeRange r;
  r.lo = real({e.key, e.value.substr(0, c1), e.origin});
  r.hi = real({e.key, e.value.substr(c1 + 1, c2 - c1 - 1), e.origin});
  r.step = real({e.key, e.value.substr(c2 + 1), e.origin});
  try {
    r.validate();
  } catch (const Error& err) {
    fail(e, err.what());
  }
  return r;
}

// Keys shared by run and sweep configs. Returns false for unknown keys.
bool apply_common(const ConfigEntry& e, int& w, int& h, Precision& precision,
                  ClassifierLimits& limits, double& census_tolerance) {
  if (e.key == "size") {
    size(e, w, h);
  } else if (e.key == "precision") {
    precision = wrapped(e, [](const std::string& v) { return parse_precision(v); });
  } else if (e.key == "summation") {
    limits.summation = wrapped(e, [](const std::string& v) { return parse_summation(v); });
  } else if (e.key == "settle_window") {
    limits.settle_window = count(e);
    if (limits.settle_window == 0) fail(e, "must be at least 1");
  } else if (e.key == "settle_tolerance") {
    limits.settle_tolerance = real(e);
  } else if (e.key == "cloud_window") {
    limits.cloud_window = count(e);
    if (limits.cloud_window == 0) fail(e, "must be at least 1");
  } else if (e.key == "census_tolerance") {
    census_tolerance = real(e);
    if (census_tolerance < 0.0) fail(e, "must be >= 0");
  } else {
    return false;
  }
  return true;
}

std::string frame_name(const std::string& prefix, std::size_t generation) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%06zu.pgm", generation);
  return prefix + buf;
}

template <Scalar T>
Universe<T> initial_universe(const RunConfig& cfg) {
  switch (cfg.seed) {
    case SeedKind::kRandom:
      return random_init<T>(SeedConfig{cfg.fraction, cfg.rng_seed, cfg.width, cfg.height});
    case SeedKind::kQutub:
      return place_centered(Universe<T>(cfg.width, cfg.height),
                            qutub(cfg.corners[0], cfg.corners[1], cfg.corners[2], cfg.corners[3]));
    case SeedKind::kPattern: {
      const Pattern p = load_pattern_file(cfg.pattern_path);
      Universe<T> empty(cfg.width, cfg.height);
      if (cfg.pattern_x) return place(std::move(empty), p, *cfg.pattern_x, *cfg.pattern_y);
      return place_centered(std::move(empty), p);
    }
  }
  throw Error("unknown seed kind");
}

template <Scalar T>
RunReport run_typed(const RunConfig& cfg) {
  ClassifierLimits limits = cfg.limits;
  limits.max_generations = std::max<std::size_t>(cfg.generations, 1);
  if (cfg.track_symmetry) limits.symmetry_center = std::pair{cfg.width / 2, cfg.height / 2};

  Universe<T> cur = initial_universe<T>(cfg);
  Universe<T> next;
  OutcomeTracker<T> tracker(limits);
  RunReport report;

  auto observe = [&](std::size_t g) {
    tracker.observe(g, cur);
    report.series.record(g, cur);
    if (!cfg.frames_prefix.empty() && g % cfg.frame_every == 0) {
      export_frame(cur, frame_name(cfg.frames_prefix, g));
    }
  };

  std::size_t g = 0;
  observe(0);
  while (g < cfg.generations && !(cfg.stop_on_outcome && tracker.resolved())) {
    step_into(cur, next, limits.summation);
    std::swap(cur, next);
    observe(++g);
  }

  report.outcome = tracker.finish(g);
  report.generations_run = g;
  report.first_asymmetric_generation = tracker.first_asymmetric_generation();
  report.max_symmetry_defect = tracker.max_symmetry_defect();
  report.final_fingerprint = fingerprint(cur);
  if (report.outcome.is<StillLife>() || report.outcome.is<Oscillator>()) {
    report.patterns = census(match_patterns(cur, standard_library(), cfg.census_tolerance));
  }
  if (report.series.size() > cfg.burn_in + 30) {
    report.steady = steady_state_stats(report.series, cfg.burn_in);
  }
  if (!cfg.series_path.empty()) {
    auto out = open_output(cfg.series_path);
    report.series.write_csv(out);
    if (!out) throw Error("write failed for '" + cfg.series_path + "'");
  }
  if (!cfg.dump_path.empty()) save_state(cur, cfg.dump_path, cfg.dump_format);
  return report;
}

}  // namespace

std::vector<ConfigEntry> read_config(std::istream& is, const std::string& source) {
  std::vector<ConfigEntry> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(source, line_no, "expected 'key = value'");
    std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.empty()) throw ParseError(source, line_no, "empty key");
    out.push_back({std::move(key), trim(std::string_view(body).substr(eq + 1)),
                   source + ":" + std::to_string(line_no)});
  }
  return out;
}

std::vector<ConfigEntry> load_config_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_config(in, path.string());
}

std::vector<ConfigEntry> parse_overrides(const std::vector<std::string>& args) {
  std::vector<ConfigEntry> out;
  for (const auto& arg : args) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ConfigError(arg, "expected key=value on the command line");
    }
    out.push_back({arg.substr(0, eq), arg.substr(eq + 1), "command line"});
  }
  return out;
}

void RunConfig::validate() const {
  if (width < 3 || height < 3) throw ConfigError("size", "both dimensions must be at least 3");
  if (frame_every == 0) throw ConfigError("frame_every", "must be at least 1");
  if (seed == SeedKind::kPattern && pattern_path.empty()) {
    throw ConfigError("pattern", "seed=pattern requires a pattern file");
  }
  if (seed != SeedKind::kPattern && !pattern_path.empty()) {
    throw ConfigError("pattern", "a pattern file conflicts with the selected seed (exactly one seeding source)");
  }
  if (pattern_x.has_value() != pattern_y.has_value()) {
    throw ConfigError(pattern_x ? "y" : "x", "pattern placement needs both x and y");
  }
  if (track_symmetry && width != height) {
    throw ConfigError("symmetry", "symmetry tracking requires a square universe");
  }
  std::set<std::string> seen;
  const std::pair<const char*, const std::string*> outputs[] = {
      {"series", &series_path}, {"dump", &dump_path}, {"frames", &frames_prefix}};
  for (const auto& [key, path] : outputs) {
    if (!path->empty() && !seen.insert(*path).second) {
      throw ConfigError(key, "output path '" + *path + "' is used twice");
    }
  }
  try {
    limits.validate();
  } catch (const Error& e) {
    throw ConfigError("limits", e.what());
  }
}

RunConfig parse_run_config(const std::vector<ConfigEntry>& entries) {
  RunConfig cfg;
  bool seed_given = false;
  bool random_keys = false;
  bool qutub_keys = false;
  for (const auto& e : entries) {
    if (apply_common(e, cfg.width, cfg.height, cfg.precision, cfg.limits, cfg.census_tolerance)) {
      continue;
    }
    if (e.key == "gens") {
      cfg.generations = count(e);
    } else if (e.key == "seed") {
      seed_given = true;
      if (e.value == "random") {
        cfg.seed = SeedKind::kRandom;
      } else if (e.value == "qutub") {
        cfg.seed = SeedKind::kQutub;
      } else if (e.value == "pattern") {
        cfg.seed = SeedKind::kPattern;
      } else {
        fail(e, "expected random|qutub|pattern");
      }
    } else if (e.key == "f") {
      cfg.fraction = amplitude(e);
      random_keys = true;
    } else if (e.key == "rng_seed") {
      cfg.rng_seed = number<std::uint64_t>(e, "an unsigned 64-bit integer");
      random_keys = true;
    } else if (e.key == "a") {
      const double a = amplitude(e);
      for (double& c : cfg.corners) c = a;
      qutub_keys = true;
    } else if (e.key.size() == 2 && e.key[0] == 'a' && e.key[1] >= '1' && e.key[1] <= '4') {
      cfg.corners[e.key[1] - '1'] = amplitude(e);
      qutub_keys = true;
    } else if (e.key == "pattern") {
      cfg.pattern_path = e.value;
    } else if (e.key == "x") {
      cfg.pattern_x = number<long long>(e, "an integer");
    } else if (e.key == "y") {
      cfg.pattern_y = number<long long>(e, "an integer");
    } else if (e.key == "stop_on_outcome") {
      cfg.stop_on_outcome = boolean(e);
    } else if (e.key == "burn_in") {
      cfg.burn_in = count(e);
    } else if (e.key == "symmetry") {
      cfg.track_symmetry = boolean(e);
    } else if (e.key == "frames") {
      cfg.frames_prefix = e.value;
    } else if (e.key == "frame_every") {
      cfg.frame_every = count(e);
      if (cfg.frame_every == 0) fail(e, "must be at least 1");
    } else if (e.key == "series") {
      cfg.series_path = e.value;
    } else if (e.key == "dump") {
      cfg.dump_path = e.value;
    } else if (e.key == "dump_format") {
      cfg.dump_format = wrapped(e, [](const std::string& v) { return parse_state_format(v); });
    } else {
      throw ConfigError(e.key, "unknown key (" + e.origin + ")");
    }
  }
  if (!seed_given && qutub_keys && !random_keys) cfg.seed = SeedKind::kQutub;
  if (!seed_given && !cfg.pattern_path.empty() && !random_keys && !qutub_keys) {
    cfg.seed = SeedKind::kPattern;
  }
  if (random_keys && cfg.seed != SeedKind::kRandom) {
    throw ConfigError("f", "random-seeding keys conflict with the selected seed (exactly one seeding source)");
  }
  if (qutub_keys && cfg.seed != SeedKind::kQutub) {
    throw ConfigError("a", "qutub corner keys conflict with the selected seed (exactly one seeding source)");
  }
  cfg.validate();
  return cfg;
}

RunReport run_experiment(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.precision == Precision::kSingle) return run_typed<float>(cfg);
  return run_typed<double>(cfg);
}

void print_report(std::ostream& os, const RunReport& r) {
  const auto old = os.precision(6);
  os << "outcome: " << r.outcome.label() << '\n';
  if (r.outcome.period() > 0) os << "period: " << r.outcome.period() << '\n';
  if (r.outcome.transient) {
    os << "transient: stable for " << r.outcome.transient->stable_generations
       << " generations from " << r.outcome.transient->first_generation << '\n';
  }
  if (!r.patterns.empty()) os << "patterns: " << r.patterns << '\n';
  os << "generations: " << r.generations_run << '\n';
  os << "final mean_a: " << r.series.back().mean_a << '\n';
  if (r.steady) {
    os << "steady state (from generation " << r.steady->burn_in << ", " << r.steady->sample_count
       << " samples): mean_a " << r.steady->mean_of_means << ", std " << r.steady->std_of_means
       << ", anderson-darling " << r.steady->anderson_darling << '\n';
  }
  if (r.first_asymmetric_generation) {
    os << "four-fold symmetry lost at generation " << *r.first_asymmetric_generation
       << " (max defect " << r.max_symmetry_defect << ")\n";
  }
  char fp[24];
  std::snprintf(fp, sizeof fp, "%016llx", static_cast<unsigned long long>(r.final_fingerprint));
  os << "final state fingerprint: " << fp << '\n';
  os.precision(old);
}

SweepConfig parse_sweep_config(const std::vector<ConfigEntry>& entries) {
  SweepConfig cfg;
  bool level_given = false;
  bool range_given = false;
  for (const auto& e : entries) {
    auto& s = cfg.spec;
    if (apply_common(e, s.width, s.height, s.precision, s.limits, s.census_tolerance)) continue;
    if (e.key == "level") {
      const ZoomLevel level = wrapped(e, [](const std::string& v) { return parse_zoom_level(v); });
      s.a14 = s.a23 = zoom_range(level);
      level_given = true;
    } else if (e.key == "a14") {
      s.a14 = lattice(e);
      range_given = true;
    } else if (e.key == "a23") {
      s.a23 = lattice(e);
      range_given = true;
    } else if (e.key == "gens") {
      s.limits.max_generations = count(e);
      if (s.limits.max_generations == 0) fail(e, "must be at least 1");
    } else if (e.key == "workers") {
      s.workers = count(e);
    } else if (e.key == "compare_precision") {
      cfg.compare_precision = boolean(e);
    } else if (e.key == "csv") {
      cfg.csv_path = e.value;
    } else if (e.key == "image") {
      cfg.image_path = e.value;
    } else {
      throw ConfigError(e.key, "unknown key (" + e.origin + ")");
    }
  }
  if (level_given && range_given) {
    throw ConfigError("level", "give either a zoom level or explicit a14/a23 ranges, not both");
  }
  if (!cfg.csv_path.empty() && cfg.csv_path == cfg.image_path) {
    throw ConfigError("image", "output path '" + cfg.image_path + "' is used twice");
  }
  try {
    cfg.spec.validate();
  } catch (const Error& e) {
    throw ConfigError("a14", e.what());
  }
  return cfg;
}

}  // namespace sqgol
