#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqgol/config.hpp"
#include "sqgol/matching.hpp"
#include "sqgol/parallel.hpp"
#include "sqgol/pattern.hpp"
#include "sqgol/still_life.hpp"
#include "sqgol/sweep.hpp"

namespace {

using namespace sqgol;

constexpr int kConfigExit = 2;

// Presets live in SQGOL_PRESET_DIR when set, else in the source tree's configs/.
std::filesystem::path preset_path(const std::string& name) {
  const char* env = std::getenv("SQGOL_PRESET_DIR");
  const std::filesystem::path dir = env && *env ? env : SQGOL_DEFAULT_PRESET_DIR;
  const auto path = dir / (name + ".cfg");
  if (!std::filesystem::exists(path)) {
    throw ConfigError("preset", "no preset '" + name + "' in " + dir.string());
  }
  return path;
}

struct Sources {
  std::string preset;
  std::string config;
  std::vector<std::string> overrides;

  std::vector<ConfigEntry> entries() const {
    std::vector<ConfigEntry> out;
    if (!preset.empty()) out = load_config_file(preset_path(preset));
    if (!config.empty()) {
      const auto file = load_config_file(config);
      out.insert(out.end(), file.begin(), file.end());
    }
    const auto cli = parse_overrides(overrides);
    out.insert(out.end(), cli.begin(), cli.end());
    return out;
  }
};

void add_sources(CLI::App* cmd, Sources& s) {
  cmd->add_option("--preset", s.preset, "Named experiment preset (e.g. qutub-059)");
  cmd->add_option("-c,--config", s.config, "key=value config file");
  cmd->add_option("settings", s.overrides, "key=value overrides (applied last)");
}

void flag_entry(std::vector<ConfigEntry>& entries, const char* key, const std::string& value) {
  if (!value.empty()) entries.push_back({key, value, "command line"});
}

std::string with_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const auto ext = p.extension().string();
  p.replace_extension();
  return p.string() + suffix + ext;
}

void write_sweep_outputs(const SweepResult& r, const std::string& csv, const std::string& image) {
  if (!csv.empty()) {
    auto out = open_output(csv);
    write_sweep_csv(out, r);
    if (!out) throw Error("write failed for '" + csv + "'");
  }
  if (!image.empty()) {
    auto out = open_output(image);
    write_phase_diagram(out, r);
    if (!out) throw Error("write failed for '" + image + "'");
  }
}

int cmd_run(const Sources& src) {
  const RunConfig cfg = parse_run_config(src.entries());
  print_report(std::cout, run_experiment(cfg));
  return 0;
}

struct SweepFlags {
  std::string level;
  std::string a14;
  std::string a23;
  std::string csv;
  std::string image;
  bool compare = false;
};

int cmd_sweep(const Sources& src, const SweepFlags& flags) {
  auto entries = src.entries();
  flag_entry(entries, "level", flags.level);
  flag_entry(entries, "a14", flags.a14);
  flag_entry(entries, "a23", flags.a23);
  flag_entry(entries, "csv", flags.csv);
  flag_entry(entries, "image", flags.image);
  if (flags.compare) entries.push_back({"compare_precision", "true", "command line"});
  const SweepConfig cfg = parse_sweep_config(entries);

  if (!cfg.compare_precision) {
    const SweepResult r = qutub_sweep(cfg.spec);
    write_sweep_outputs(r, cfg.csv_path, cfg.image_path);
    std::cout << "points: " << r.records.size() << '\n'
              << "census: " << format_class_census(r.class_census()) << '\n';
    return 0;
  }

  const PrecisionComparison cmp = precision_compare(cfg.spec);
  write_sweep_outputs(cmp.double_result, cfg.csv_path, cfg.image_path);
  write_sweep_outputs(cmp.single_result,
                      cfg.csv_path.empty() ? "" : with_suffix(cfg.csv_path, ".single"),
                      cfg.image_path.empty() ? "" : with_suffix(cfg.image_path, ".single"));
  std::cout << "points: " << cmp.points << '\n'
            << "census (double): " << format_class_census(cmp.double_result.class_census()) << '\n'
            << "census (single): " << format_class_census(cmp.single_result.class_census()) << '\n'
            << "agreement: " << cmp.agreements << '/' << cmp.points << " = "
            << cmp.agreement_fraction << '\n'
            << "disagreements: " << cmp.disagreements.size() << '\n';
  for (const auto& d : cmp.disagreements) {
    std::cout << "  a14=" << d.a14 << " a23=" << d.a23 << ": " << d.double_outcome << " (double) vs "
              << d.single_outcome << " (single)\n";
  }
  return 0;
}

struct VerifyFlags {
  std::string pattern;
  std::string precision = "double";
  std::string summation = "row_major";
  int padding = 3;
  std::size_t generations = 1;
  double step = 0.05;
};

template <Scalar T>
int verify_typed(const Pattern& p, const VerifyFlags& f) {
  if (p.free_count() == 0) {
    const bool still = is_still_life<T>(p, f.padding, f.generations, parse_summation(f.summation));
    std::cout << p.name() << ": " << (still ? "still life" : "not a still life") << '\n';
    return still ? 0 : 1;
  }
  const auto region = stability_region<T>(p, f.step, f.padding, f.generations);
  std::size_t stable = 0;
  for (const auto& s : region) {
    if (!s.stable) continue;
    ++stable;
    std::cout << "stable:";
    for (double v : s.values) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << p.name() << ": " << stable << " of " << region.size()
            << " sampled assignments are still lifes\n";
  return 0;
}

int cmd_verify(const VerifyFlags& f) {
  const Pattern p = load_pattern_file(f.pattern);
  return parse_precision(f.precision) == Precision::kSingle ? verify_typed<float>(p, f)
                                                             : verify_typed<double>(p, f);
}

struct MatchFlags {
  std::string state;
  double tolerance = 0.0;
  std::vector<std::string> extra_patterns;
};

int cmd_match(const MatchFlags& f) {
  auto library = standard_library();
  for (const auto& path : f.extra_patterns) library.push_back(load_pattern_file(path));
  const AnyUniverse any = load_state_file(f.state);
  const auto matches = std::visit(
      [&](const auto& u) { return match_patterns(u, library, f.tolerance); }, any);
  for (const auto& m : matches) {
    std::cout << m.name << " at (" << m.x << ',' << m.y << ')';
    for (double v : m.free_values) std::cout << ' ' << v;
    std::cout << '\n';
  }
  std::cout << "census: " << census(matches) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semi-quantum game of life simulator"};
  app.require_subcommand(1);
  app.footer(std::string("Worker threads: set ") + kThreadsEnv + " (default: hardware concurrency).");

  Sources run_src;
  auto* run = app.add_subcommand("run", "Evolve one universe and report its outcome");
  add_sources(run, run_src);

  Sources sweep_src;
  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Qutub parameter sweep with phase-diagram output");
  add_sources(sweep, sweep_src);
  sweep->add_option("--level", sweep_flags.level, "coarse|fine|finest");
  sweep->add_option("--a14", sweep_flags.a14, "lo:hi:step for a1 = a4");
  sweep->add_option("--a23", sweep_flags.a23, "lo:hi:step for a2 = a3");
  sweep->add_option("--csv", sweep_flags.csv, "Sweep CSV output");
  sweep->add_option("--image", sweep_flags.image, "Phase-diagram PPM output");
  sweep->add_flag("--compare-precision", sweep_flags.compare, "Run in single and double precision");

  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify-still", "Check a pattern file for still-life stability");
  verify->add_option("pattern", verify_flags.pattern, "Pattern file")->required();
  verify->add_option("--precision", verify_flags.precision, "single|double");
  verify->add_option("--summation", verify_flags.summation, "row_major|sorted");
  verify->add_option("--padding", verify_flags.padding, "Dead border width");
  verify->add_option("--generations", verify_flags.generations, "Generations to check");
  verify->add_option("--step", verify_flags.step, "Grid step for free cells");

  MatchFlags match_flags;
  auto* match = app.add_subcommand("match", "Find library patterns in a state dump");
  match->add_option("state", match_flags.state, "State dump (text or binary)")->required();
  match->add_option("--tolerance", match_flags.tolerance, "Amplitude tolerance");
  match->add_option("--pattern", match_flags.extra_patterns, "Extra pattern files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_src);
    if (*sweep) return cmd_sweep(sweep_src, sweep_flags);
    if (*verify) return cmd_verify(verify_flags);
    if (*match) return cmd_match(match_flags);
  } catch (const ConfigError& e) {
    std::cerr << "sqgol: " << e.what() << '\n';
    return kConfigExit;
  } catch (const std::exception& e) {
    std::cerr << "sqgol: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
