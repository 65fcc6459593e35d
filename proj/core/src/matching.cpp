#include "sqgol/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace sqgol {

namespace {

enum class Expect : unsigned char { kDead, kValue, kFree };

struct Window {
  int width = 0;  // extent plus the isolating ring
  int height = 0;
  std::vector<Expect> kind;
  std::vector<double> value;
  std::vector<int> free_order;  // free slot index per window cell, -1 otherwise
  std::size_t free_slots = 0;
};

Window make_window(const Pattern& p) {
  Window w;
  w.width = p.width() + 2;
  w.height = p.height() + 2;
  const std::size_t n = static_cast<std::size_t>(w.width) * w.height;
  w.kind.assign(n, Expect::kDead);
  w.value.assign(n, 0.0);
  w.free_order.assign(n, -1);
  for (const auto& c : p.cells()) {
    const std::size_t i = static_cast<std::size_t>(c.dy + 1) * w.width + (c.dx + 1);
    if (c.free) {
      w.kind[i] = Expect::kFree;
      w.free_order[i] = static_cast<int>(w.free_slots++);
    } else {
      w.kind[i] = Expect::kValue;
      w.value[i] = c.amplitude;
    }
  }
  return w;
}

template <Scalar T>
bool matches_at(const Universe<T>& u, const Window& w, int x0, int y0, double tol,
                std::vector<double>& free_values) {
  free_values.assign(w.free_slots, 0.0);
  for (int wy = 0; wy < w.height; ++wy) {
    for (int wx = 0; wx < w.width; ++wx) {
      const std::size_t i = static_cast<std::size_t>(wy) * w.width + wx;
      const double a = static_cast<double>(u.alive(x0 + wx - 1LL, y0 + wy - 1LL));
      switch (w.kind[i]) {
        case Expect::kDead:
          if (a > tol) return false;
          break;
        case Expect::kValue:
          if (std::abs(a - w.value[i]) > tol) return false;
          break;
        case Expect::kFree:
          if (!(a > tol && a < 1.0 - tol)) return false;
          free_values[static_cast<std::size_t>(w.free_order[i])] = a;
          break;
      }
    }
  }
  return true;
}

}  // namespace

template <Scalar T>
std::vector<PatternMatch> match_patterns(const Universe<T>& u, const std::vector<Pattern>& library,
                                         double tolerance) {
  if (!(tolerance >= 0.0)) throw Error("match tolerance must be >= 0");
  std::vector<PatternMatch> out;
  std::vector<double> free_values;
  for (const auto& pattern : library) {
    for (const auto& oriented : pattern.orientations()) {
      const Window w = make_window(oriented);
      if (w.width > u.width() || w.height > u.height()) continue;
      for (int y = 0; y < u.height(); ++y) {
        for (int x = 0; x < u.width(); ++x) {
          if (matches_at(u, w, x, y, tolerance, free_values)) {
            out.push_back({pattern.name(), x, y, free_values});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string census(const std::vector<PatternMatch>& matches) {
  std::map<std::string, std::size_t> counts;
  for (const auto& m : matches) ++counts[m.name];
  std::vector<std::pair<std::string, std::size_t>> order(counts.begin(), counts.end());
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& l, const auto& r) { return l.second > r.second; });
  std::string out;
  for (const auto& [name, count] : order) {
    if (!out.empty()) out += ';';
    out += name;
    out += "×";
    out += std::to_string(count);
  }
  return out;
}

template std::vector<PatternMatch> match_patterns<float>(const Universe<float>&,
                                                         const std::vector<Pattern>&, double);
template std::vector<PatternMatch> match_patterns<double>(const Universe<double>&,
                                                          const std::vector<Pattern>&, double);

}  // namespace sqgol
