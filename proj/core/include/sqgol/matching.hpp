#pragma once

#include <string>
#include <vector>

#include "sqgol/pattern.hpp"
#include "sqgol/universe.hpp"

namespace sqgol {

struct PatternMatch {
  std::string name;
  int x = 0;  // top-left of the matched orientation's extent
  int y = 0;
  std::vector<double> free_values;  // amplitudes found at the free cells

  friend bool operator==(const PatternMatch&, const PatternMatch&) = default;
  friend auto operator<=>(const PatternMatch&, const PatternMatch&) = default;
};

/// Finds every placement of every library pattern, in all distinct dihedral
/// orientations. A placement matches when each fixed stencil cell is within
/// `tolerance` of the universe, each free cell is semi-live (strictly inside
/// (tolerance, 1 - tolerance), i.e. (0,1) at tolerance 0), and every other
/// cell of the extent and of the one-cell ring around it is within
/// `tolerance` of 0. Results are sorted.
template <Scalar T>
std::vector<PatternMatch> match_patterns(const Universe<T>& u, const std::vector<Pattern>& library,
                                         double tolerance = 0.0);

/// "name×count" entries joined by ';', most frequent first, ties by name.
/// Empty string for no matches.
std::string census(const std::vector<PatternMatch>& matches);

}  // namespace sqgol
