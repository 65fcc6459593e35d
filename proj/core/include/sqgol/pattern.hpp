#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "sqgol/cell.hpp"
#include "sqgol/universe.hpp"

namespace sqgol {

/// One stencil cell. A free cell carries no fixed amplitude: the matcher
/// accepts any semi-live value in (0,1) there, and the stability search
/// samples it.
struct StencilCell {
  int dx = 0;
  int dy = 0;
  double amplitude = 0.0;
  bool free = false;

  friend bool operator==(const StencilCell&, const StencilCell&) = default;
};

/// A named multi-cell stencil. Cells inside the extent that are not listed
/// are treated as dead by the matcher and left untouched by place().
class Pattern {
 public:
  Pattern() = default;

  /// Throws sqgol::Error on out-of-extent or duplicate offsets, or amplitudes
  /// outside [0,1].
  Pattern(std::string name, int width, int height, std::vector<StencilCell> cells);

  const std::string& name() const noexcept { return name_; }
  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  const std::vector<StencilCell>& cells() const noexcept { return cells_; }

  std::size_t free_count() const noexcept;

  /// Copy with the free cells assigned, in stencil order.
  Pattern with_free_values(const std::vector<double>& values) const;

  /// Copy with every listed cell marked free (a template for stability search).
  Pattern all_free() const;

  /// The eight dihedral images, normalized to non-negative offsets, with
  /// duplicates removed. Stencil order is preserved within each image.
  std::vector<Pattern> orientations() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  std::string name_;
  int width_ = 0;
  int height_ = 0;
  std::vector<StencilCell> cells_;
};

/// 3x3 qutub: live edge-centers, semi-live corners a1 (NW), a2 (NE),
/// a3 (SW), a4 (SE), dead center. Stable iff every pair of corners sharing an
/// edge sums to at most 1.
Pattern qutub(double a1, double a2, double a3, double a4);

/// Qutub with all four corners free.
Pattern qutub_template();

/// Standard Conway patterns: "block", "tub", "blinker".
Pattern classical_pattern(std::string_view name);

/// {block, tub, blinker, qutub template}.
std::vector<Pattern> standard_library();

/// Overwrites the stencil cells at toroidal offsets from (x, y). Free cells
/// are rejected. Throws if the pattern extent exceeds the universe.
template <Scalar T>
Universe<T> place(Universe<T> u, const Pattern& p, long long x, long long y);

/// Places `p` so its extent is centered on the universe center
/// (width/2, height/2).
template <Scalar T>
Universe<T> place_centered(Universe<T> u, const Pattern& p);

// Plain-text pattern files: a header line "name width height", then one line
// per stencil cell "dx dy amplitude". Amplitudes are written with 17
// significant digits; a free cell is written as "?". Blank lines and lines
// starting with '#' are ignored on read.
void write_pattern(std::ostream& os, const Pattern& p);
std::string format_pattern(const Pattern& p);
Pattern read_pattern(std::istream& is, const std::string& source = "<pattern>");
Pattern parse_pattern(std::string_view text);
Pattern load_pattern_file(const std::string& path);
void save_pattern_file(const std::string& path, const Pattern& p);

}  // namespace sqgol
