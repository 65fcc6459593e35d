#pragma once

#include <cstddef>
#include <vector>

#include "sqgol/engine.hpp"
#include "sqgol/pattern.hpp"

namespace sqgol {

/// Embeds `p` in a dead universe with `padding` dead cells on every side and
/// checks that each of `max_generations` steps reproduces the universe
/// bitwise. Throws if padding < 2 or the pattern has free cells.
template <Scalar T>
bool is_still_life(const Pattern& p, int padding = 3, std::size_t max_generations = 1,
                   Summation order = Summation::kRowMajor);

struct StabilitySample {
  std::vector<double> values;  // one per free cell, in stencil order
  bool stable = false;

  friend bool operator==(const StabilitySample&, const StabilitySample&) = default;
};

/// Samples every free cell of `tmpl` on {0, step, 2*step, ...} within [0,1]
/// (1 included when step divides it) and runs is_still_life on each
/// assignment. Values are computed as i*step, never by accumulation. Results
/// are in lexicographic order of the sampled values, independent of the
/// worker count. Throws for 0 or more than 4 free cells, or step outside (0, 0.5].
template <Scalar T>
std::vector<StabilitySample> stability_region(const Pattern& tmpl, double grid_step,
                                              int padding = 3, std::size_t max_generations = 1,
                                              std::size_t workers = 0);

/// Number of lattice values per free cell for a given step.
std::size_t lattice_count(double grid_step);

}  // namespace sqgol
