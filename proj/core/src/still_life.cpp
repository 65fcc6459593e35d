#include "sqgol/still_life.hpp"

#include <algorithm>
#include <cmath>

#include "sqgol/parallel.hpp"

namespace sqgol {

template <Scalar T>
bool is_still_life(const Pattern& p, int padding, std::size_t max_generations, Summation order) {
  if (padding < 2) throw Error("still-life check needs padding >= 2");
  const Universe<T> initial =
      place(Universe<T>(p.width() + 2 * padding, p.height() + 2 * padding), p, padding, padding);
  Universe<T> cur = initial;
  Universe<T> next;
  for (std::size_t g = 0; g < std::max<std::size_t>(1, max_generations); ++g) {
    step_into(cur, next, order);
    if (!next.identical(initial)) return false;
    std::swap(cur, next);
  }
  return true;
}

std::size_t lattice_count(double grid_step) {
  const double n = 1.0 / grid_step;
  const double rounded = std::round(n);
  // tolerate the representation error of decimal steps like 0.05
  if (std::abs(n - rounded) <= 1e-9 * rounded) return static_cast<std::size_t>(rounded) + 1;
  return static_cast<std::size_t>(std::floor(n)) + 1;
}

template <Scalar T>
std::vector<StabilitySample> stability_region(const Pattern& tmpl, double grid_step, int padding,
                                              std::size_t max_generations, std::size_t workers) {
  const std::size_t slots = tmpl.free_count();
  if (slots == 0) throw Error("stability_region: template has no free cells");
  if (slots > 4) throw Error("stability_region: at most 4 free cells are supported");
  if (!(grid_step > 0.0 && grid_step <= 0.5)) {
    throw Error("stability_region: grid step must lie in (0, 0.5]");
  }
  const std::size_t per_axis = lattice_count(grid_step);
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots; ++s) total *= per_axis;

  std::vector<StabilitySample> out(total);
  parallel_for(
      total,
      [&](std::size_t flat) {
        std::vector<double> values(slots);
        std::size_t rem = flat;
        for (std::size_t s = slots; s-- > 0;) {
          values[s] = std::min(1.0, static_cast<double>(rem % per_axis) * grid_step);
          rem /= per_axis;
        }
        out[flat].stable =
            is_still_life<T>(tmpl.with_free_values(values), padding, max_generations);
        out[flat].values = std::move(values);
      },
      workers);
  return out;
}

template bool is_still_life<float>(const Pattern&, int, std::size_t, Summation);
template bool is_still_life<double>(const Pattern&, int, std::size_t, Summation);
template std::vector<StabilitySample> stability_region<float>(const Pattern&, double, int,
                                                              std::size_t, std::size_t);
template std::vector<StabilitySample> stability_region<double>(const Pattern&, double, int,
                                                               std::size_t, std::size_t);

}  // namespace sqgol
