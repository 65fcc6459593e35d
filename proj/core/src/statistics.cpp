#include "sqgol/statistics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

namespace sqgol {

template <Scalar T>
T pairwise_sum(std::span<const T> values) noexcept {
  if (values.size() <= 8) {
    T acc = T(0);
    for (T v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <Scalar T>
double mean_liveness(const Universe<T>& u) noexcept {
  const auto cells = u.amplitudes();
  if (cells.empty()) return 0.0;
  const T mean = pairwise_sum(cells) / static_cast<T>(cells.size());
  return static_cast<double>(std::clamp(mean, T(0), T(1)));
}

template <Scalar T>
double liveness_std(const Universe<T>& u) {
  const auto cells = u.amplitudes();
  if (cells.empty()) return 0.0;
  const T n = static_cast<T>(cells.size());
  const T mean = pairwise_sum(cells) / n;
  std::vector<T> sq(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const T d = cells[i] - mean;
    sq[i] = d * d;
  }
  const T var = pairwise_sum(std::span<const T>(sq)) / n;
  return static_cast<double>(std::sqrt(var));
}

template float pairwise_sum<float>(std::span<const float>) noexcept;
template double pairwise_sum<double>(std::span<const double>) noexcept;
template double mean_liveness<float>(const Universe<float>&) noexcept;
template double mean_liveness<double>(const Universe<double>&) noexcept;
template double liveness_std<float>(const Universe<float>&);
template double liveness_std<double>(const Universe<double>&);

void LivenessSeries::append(LivenessRecord r) {
  const std::size_t expected = records_.empty() ? 0 : records_.back().generation + 1;
  if (records_.empty() ? r.generation != 0 : r.generation <= records_.back().generation) {
    throw Error("liveness series generations must increase from 0 (expected " +
                std::to_string(expected) + ", got " + std::to_string(r.generation) + ")");
  }
  if (!(r.mean_a >= 0.0 && r.mean_a <= 1.0)) throw Error("mean liveness outside [0,1]");
  records_.push_back(r);
}

void LivenessSeries::write_csv(std::ostream& os) const {
  const auto old = os.precision(17);
  os << "generation,mean_a,std_a\n";
  for (const auto& r : records_) os << r.generation << ',' << r.mean_a << ',' << r.std_a << '\n';
  os.precision(old);
}

namespace {

template <class V>
V parse_field(const std::string& text, const std::string& source, std::size_t line_no) {
  V v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(source, line_no, "malformed field '" + text + "'");
  }
  return v;
}

}  // namespace

LivenessSeries LivenessSeries::read_csv(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(is, line) || line != "generation,mean_a,std_a") {
    throw ParseError(source, line_no, "expected header 'generation,mean_a,std_a'");
  }
  LivenessSeries s;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string g, m, d;
    if (!std::getline(ls, g, ',') || !std::getline(ls, m, ',') || !std::getline(ls, d)) {
      throw ParseError(source, line_no, "expected 3 comma-separated fields");
    }
    try {
      s.append({parse_field<std::size_t>(g, source, line_no), parse_field<double>(m, source, line_no),
                parse_field<double>(d, source, line_no)});
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  }
  return s;
}

double anderson_darling_normal(std::span<const double> samples) {
  const std::size_t n = samples.size();
  if (n < 8) return std::numeric_limits<double>::quiet_NaN();
  std::vector<double> x(samples.begin(), samples.end());
  std::sort(x.begin(), x.end());
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) return std::numeric_limits<double>::quiet_NaN();

  // log Phi(z) and log(1 - Phi(z)) through erfc for tail accuracy
  auto log_cdf = [](double z) { return std::log(0.5 * std::erfc(-z / std::numbers::sqrt2)); };
  auto log_sf = [](double z) { return std::log(0.5 * std::erfc(z / std::numbers::sqrt2)); };

  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double zi = (x[i] - mean) / sd;
    const double zr = (x[n - 1 - i] - mean) / sd;
    s += static_cast<double>(2 * i + 1) * (log_cdf(zi) + log_sf(zr));
  }
  const double nn = static_cast<double>(n);
  const double a2 = -nn - s / nn;
  return a2 * (1.0 + 0.75 / nn + 2.25 / (nn * nn));
}

SteadyStateStats steady_state_stats(const LivenessSeries& series, std::size_t burn_in) {
  if (series.size() <= burn_in + 30) {
    throw Error("steady-state statistics need more than burn_in + 30 generations (have " +
                std::to_string(series.size()) + ", burn_in " + std::to_string(burn_in) + ")");
  }
  std::vector<double> means;
  for (const auto& r : series.records()) {
    if (r.generation >= burn_in) means.push_back(r.mean_a);
  }
  if (means.size() < 30) throw Error("steady-state statistics need at least 30 samples");

  SteadyStateStats st;
  st.burn_in = burn_in;
  st.sample_count = means.size();
  double sum = 0.0;
  for (double m : means) sum += m;
  st.mean_of_means = sum / static_cast<double>(means.size());
  double ss = 0.0;
  for (double m : means) ss += (m - st.mean_of_means) * (m - st.mean_of_means);
  st.std_of_means = std::sqrt(ss / static_cast<double>(means.size()));
  st.anderson_darling = anderson_darling_normal(means);
  return st;
}

}  // namespace sqgol
