#include "sqgol/sweep.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "sqgol/matching.hpp"
#include "sqgol/parallel.hpp"
#include "sqgol/pattern.hpp"

namespace sqgol {

void LatticeRange::validate() const {
  if (!(lo >= 0.0 && lo <= hi && hi <= 1.0)) throw Error("lattice range needs 0 <= lo <= hi <= 1");
  if (!(step > 0.0) || !std::isfinite(step)) throw Error("lattice step must be positive");
}

std::size_t LatticeRange::count() const {
  validate();
  const double n = (hi - lo) / step;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) <= 1e-9 * std::max(1.0, rounded)) {
    return static_cast<std::size_t>(rounded) + 1;
  }
  return static_cast<std::size_t>(std::floor(n)) + 1;
}

void SweepSpec::validate() const {
  a14.validate();
  a23.validate();
  if (width < 3 || height < 3) throw Error("sweep universe must be at least 3x3");
  if (!(census_tolerance >= 0.0)) throw Error("census tolerance must be >= 0");
  limits.validate();
}

std::map<std::string, std::size_t> SweepResult::class_census() const {
  std::map<std::string, std::size_t> out;
  for (const auto& r : records) ++out[r.outcome];
  return out;
}

std::string format_class_census(const std::map<std::string, std::size_t>& census) {
  std::string out;
  for (const auto& [label, n] : census) {
    if (!out.empty()) out += ", ";
    out += label + ":" + std::to_string(n);
  }
  return out;
}

template <Scalar T>
SweepRecord sweep_point(const SweepSpec& spec, std::size_t i14, std::size_t i23, Outcome* outcome) {
  const T a14 = spec.a14.value<T>(i14);
  const T a23 = spec.a23.value<T>(i23);
  const Pattern seed = qutub(a14, a23, a23, a14);
  Universe<T> u0 = place_centered(Universe<T>(spec.width, spec.height), seed);

  const Classification<T> c = classify_outcome(u0, spec.limits);

  SweepRecord rec;
  rec.a14 = static_cast<double>(a14);
  rec.a23 = static_cast<double>(a23);
  rec.outcome = c.outcome.label();
  rec.period = c.outcome.period();
  rec.stable_gens = c.outcome.transient ? c.outcome.transient->stable_generations : 0;
  rec.final_mean_a = c.series.back().mean_a;
  rec.generations = c.generations_run;
  if (c.outcome.template is<StillLife>() || c.outcome.template is<Oscillator>()) {
    rec.patterns = census(match_patterns(c.final_state, standard_library(), spec.census_tolerance));
  }
  if (outcome) *outcome = c.outcome;
  return rec;
}

template SweepRecord sweep_point<float>(const SweepSpec&, std::size_t, std::size_t, Outcome*);
template SweepRecord sweep_point<double>(const SweepSpec&, std::size_t, std::size_t, Outcome*);

SweepResult qutub_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepResult result;
  result.spec = spec;
  result.a14_count = spec.a14.count();
  result.a23_count = spec.a23.count();
  const std::size_t n = result.a14_count * result.a23_count;
  result.records.resize(n);
  result.outcomes.resize(n);
  parallel_for(
      n,
      [&](std::size_t k) {
        const std::size_t i14 = k / result.a23_count;
        const std::size_t i23 = k % result.a23_count;
        if (spec.precision == Precision::kSingle) {
          result.records[k] = sweep_point<float>(spec, i14, i23, &result.outcomes[k]);
        } else {
          result.records[k] = sweep_point<double>(spec, i14, i23, &result.outcomes[k]);
        }
      },
      spec.workers);
  return result;
}

ZoomLevel parse_zoom_level(std::string_view text) {
  if (text == "coarse") return ZoomLevel::kCoarse;
  if (text == "fine") return ZoomLevel::kFine;
  if (text == "finest") return ZoomLevel::kFinest;
  throw Error("unknown zoom level '" + std::string(text) + "' (expected coarse|fine|finest)");
}

std::string_view to_string(ZoomLevel level) {
  switch (level) {
    case ZoomLevel::kCoarse: return "coarse";
    case ZoomLevel::kFine: return "fine";
    case ZoomLevel::kFinest: return "finest";
  }
  return "coarse";
}

LatticeRange zoom_range(ZoomLevel level) {
  switch (level) {
    case ZoomLevel::kCoarse: return {0.5, 1.0, 0.01};
    case ZoomLevel::kFine: return {0.50, 0.51, 0.001};
    case ZoomLevel::kFinest: return {0.500, 0.501, 0.0001};
  }
  return {};
}

SweepResult zoom_sweep(ZoomLevel level, const SweepSpec& base) {
  SweepSpec spec = base;
  spec.a14 = spec.a23 = zoom_range(level);
  return qutub_sweep(spec);
}

PrecisionComparison precision_compare(const SweepSpec& spec) {
  PrecisionComparison cmp;
  SweepSpec s = spec;
  s.precision = Precision::kDouble;
  cmp.double_result = qutub_sweep(s);
  s.precision = Precision::kSingle;
  cmp.single_result = qutub_sweep(s);

  const auto& d = cmp.double_result;
  const auto& f = cmp.single_result;
  cmp.points = d.records.size();
  for (std::size_t k = 0; k < cmp.points; ++k) {
    if (d.records[k].outcome == f.records[k].outcome) {
      ++cmp.agreements;
    } else {
      cmp.disagreements.push_back({k / d.a23_count, k % d.a23_count, d.records[k].a14,
                                   d.records[k].a23, d.records[k].outcome, f.records[k].outcome});
    }
  }
  cmp.agreement_fraction =
      cmp.points == 0 ? 1.0 : static_cast<double>(cmp.agreements) / static_cast<double>(cmp.points);
  return cmp;
}

namespace {

constexpr std::string_view kSweepHeader =
    "a14,a23,outcome,period,stable_gens,final_mean_a,generations,patterns";

template <class V>
V parse_csv_field(const std::string& text, const std::string& source, std::size_t line_no,
                  const char* column) {
  V v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(source, line_no, std::string("malformed ") + column + " '" + text + "'");
  }
  return v;
}

}  // namespace

void write_sweep_csv(std::ostream& os, const SweepResult& result) {
  const auto old = os.precision(17);
  os << kSweepHeader << '\n';
  for (const auto& r : result.records) {
    os << r.a14 << ',' << r.a23 << ',' << r.outcome << ',' << r.period << ',' << r.stable_gens
       << ',' << r.final_mean_a << ',' << r.generations << ',' << r.patterns << '\n';
  }
  os.precision(old);
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line) || line != kSweepHeader) {
    throw ParseError(source, line_no, "expected sweep CSV header");
  }
  std::vector<SweepRecord> out;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (f.size() != 8) {
      throw ParseError(source, line_no, "expected 8 fields, found " + std::to_string(f.size()));
    }
    SweepRecord r;
    r.a14 = parse_csv_field<double>(f[0], source, line_no, "a14");
    r.a23 = parse_csv_field<double>(f[1], source, line_no, "a23");
    r.outcome = f[2];
    r.period = parse_csv_field<std::size_t>(f[3], source, line_no, "period");
    r.stable_gens = parse_csv_field<std::size_t>(f[4], source, line_no, "stable_gens");
    r.final_mean_a = parse_csv_field<double>(f[5], source, line_no, "final_mean_a");
    r.generations = parse_csv_field<std::size_t>(f[6], source, line_no, "generations");
    r.patterns = f[7];
    out.push_back(std::move(r));
  }
  return out;
}

Rgb outcome_color(std::string_view label) {
  if (label == "extinct") return {0, 0, 0};
  if (label == "still_life") return {0, 0, 255};
  if (label == "oscillator") return {0, 200, 0};
  if (label == "cloud") return {200, 200, 200};
  if (label == "transient_extinct") return {128, 0, 128};
  if (label == "transient_cloud") return {255, 160, 0};
  if (label == "transient_still") return {100, 180, 255};
  return {255, 0, 0};
}

void write_phase_diagram(std::ostream& os, const SweepResult& result) {
  const std::size_t w = result.a14_count;
  const std::size_t h = result.a23_count;
  os << "P6\n" << w << ' ' << h << "\n255\n";
  for (std::size_t row = 0; row < h; ++row) {
    const std::size_t i23 = h - 1 - row;
    for (std::size_t i14 = 0; i14 < w; ++i14) {
      const Rgb c = outcome_color(result.at(i14, i23).outcome);
      const char px[3] = {static_cast<char>(c.r), static_cast<char>(c.g), static_cast<char>(c.b)};
      os.write(px, 3);
    }
  }
}

}  // namespace sqgol
