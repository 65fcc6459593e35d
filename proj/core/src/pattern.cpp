#include "sqgol/pattern.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <tuple>

namespace sqgol {

Pattern::Pattern(std::string name, int width, int height, std::vector<StencilCell> cells)
    : name_(std::move(name)), width_(width), height_(height), cells_(std::move(cells)) {
  if (name_.empty() || name_.find_first_of(" \t\r\n") != std::string::npos) {
    throw Error("pattern name must be a single non-empty token");
  }
  if (width_ <= 0 || height_ <= 0) throw Error("pattern '" + name_ + "' has empty extent");
  std::set<std::pair<int, int>> seen;
  for (const auto& c : cells_) {
    if (c.dx < 0 || c.dy < 0 || c.dx >= width_ || c.dy >= height_) {
      throw Error("pattern '" + name_ + "': offset (" + std::to_string(c.dx) + "," +
                  std::to_string(c.dy) + ") outside extent");
    }
    if (!seen.emplace(c.dx, c.dy).second) {
      throw Error("pattern '" + name_ + "': duplicate offset (" + std::to_string(c.dx) + "," +
                  std::to_string(c.dy) + ")");
    }
    if (!c.free && !(c.amplitude >= 0.0 && c.amplitude <= 1.0)) {
      throw Error("pattern '" + name_ + "': amplitude out of [0,1]");
    }
  }
}

std::size_t Pattern::free_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const StencilCell& c) { return c.free; }));
}

Pattern Pattern::with_free_values(const std::vector<double>& values) const {
  if (values.size() != free_count()) {
    throw Error("pattern '" + name_ + "' has " + std::to_string(free_count()) +
                " free cells, got " + std::to_string(values.size()) + " values");
  }
  auto cells = cells_;
  std::size_t k = 0;
  for (auto& c : cells) {
    if (!c.free) continue;
    c.amplitude = values[k++];
    c.free = false;
  }
  return Pattern(name_, width_, height_, std::move(cells));
}

Pattern Pattern::all_free() const {
  auto cells = cells_;
  for (auto& c : cells) {
    c.free = true;
    c.amplitude = 0.0;
  }
  return Pattern(name_, width_, height_, std::move(cells));
}

namespace {

Pattern rotated(const Pattern& p) {
  // (dx, dy) -> (h-1-dy, dx); extent becomes (h, w)
  std::vector<StencilCell> cells = p.cells();
  for (auto& c : cells) {
    const int dx = c.dx;
    c.dx = p.height() - 1 - c.dy;
    c.dy = dx;
  }
  return Pattern(p.name(), p.height(), p.width(), std::move(cells));
}

Pattern mirrored(const Pattern& p) {
  std::vector<StencilCell> cells = p.cells();
  for (auto& c : cells) c.dx = p.width() - 1 - c.dx;
  return Pattern(p.name(), p.width(), p.height(), std::move(cells));
}

auto shape_key(const Pattern& p) {
  std::vector<std::tuple<int, int, bool, double>> key;
  for (const auto& c : p.cells()) key.emplace_back(c.dy, c.dx, c.free, c.free ? 0.0 : c.amplitude);
  std::sort(key.begin(), key.end());
  return std::make_tuple(p.width(), p.height(), key);
}

}  // namespace

std::vector<Pattern> Pattern::orientations() const {
  std::vector<Pattern> out;
  std::vector<decltype(shape_key(*this))> keys;
  Pattern base = *this;
  for (int m = 0; m < 2; ++m) {
    Pattern cur = m == 0 ? base : mirrored(base);
    for (int r = 0; r < 4; ++r) {
      auto key = shape_key(cur);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        keys.push_back(std::move(key));
        out.push_back(cur);
      }
      cur = rotated(cur);
    }
  }
  return out;
}

Pattern qutub(double a1, double a2, double a3, double a4) {
  for (double a : {a1, a2, a3, a4}) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("qutub corner amplitude out of [0,1]");
  }
  return Pattern("qutub", 3, 3,
                 {{0, 0, a1, false},
                  {1, 0, 1.0, false},
                  {2, 0, a2, false},
                  {0, 1, 1.0, false},
                  {2, 1, 1.0, false},
                  {0, 2, a3, false},
                  {1, 2, 1.0, false},
                  {2, 2, a4, false}});
}

Pattern qutub_template() {
  return Pattern("qutub", 3, 3,
                 {{0, 0, 0.0, true},
                  {1, 0, 1.0, false},
                  {2, 0, 0.0, true},
                  {0, 1, 1.0, false},
                  {2, 1, 1.0, false},
                  {0, 2, 0.0, true},
                  {1, 2, 1.0, false},
                  {2, 2, 0.0, true}});
}

Pattern classical_pattern(std::string_view name) {
  if (name == "block") {
    return Pattern("block", 2, 2, {{0, 0, 1.0}, {1, 0, 1.0}, {0, 1, 1.0}, {1, 1, 1.0}});
  }
  if (name == "tub") {
    return Pattern("tub", 3, 3, {{1, 0, 1.0}, {0, 1, 1.0}, {2, 1, 1.0}, {1, 2, 1.0}});
  }
  if (name == "blinker") {
    return Pattern("blinker", 3, 1, {{0, 0, 1.0}, {1, 0, 1.0}, {2, 0, 1.0}});
  }
  throw Error("unknown classical pattern '" + std::string(name) + "' (expected block|tub|blinker)");
}

std::vector<Pattern> standard_library() {
  return {classical_pattern("block"), classical_pattern("tub"), classical_pattern("blinker"),
          qutub_template()};
}

template <Scalar T>
Universe<T> place(Universe<T> u, const Pattern& p, long long x, long long y) {
  if (p.width() > u.width() || p.height() > u.height()) {
    throw Error("pattern '" + p.name() + "' does not fit the universe");
  }
  for (const auto& c : p.cells()) {
    if (c.free) throw Error("cannot place pattern '" + p.name() + "' with unassigned free cells");
    u.set(x + c.dx, y + c.dy, CellState<T>::from_liveness(static_cast<T>(c.amplitude)));
  }
  return u;
}

template <Scalar T>
Universe<T> place_centered(Universe<T> u, const Pattern& p) {
  const long long x = u.width() / 2 - (p.width() - 1) / 2;
  const long long y = u.height() / 2 - (p.height() - 1) / 2;
  return place(std::move(u), p, x, y);
}

template Universe<float> place<float>(Universe<float>, const Pattern&, long long, long long);
template Universe<double> place<double>(Universe<double>, const Pattern&, long long, long long);
template Universe<float> place_centered<float>(Universe<float>, const Pattern&);
template Universe<double> place_centered<double>(Universe<double>, const Pattern&);

void write_pattern(std::ostream& os, const Pattern& p) {
  os << p.name() << ' ' << p.width() << ' ' << p.height() << '\n';
  const auto old_precision = os.precision(17);
  for (const auto& c : p.cells()) {
    os << c.dx << ' ' << c.dy << ' ';
    if (c.free) {
      os << '?';
    } else {
      os << c.amplitude;
    }
    os << '\n';
  }
  os.precision(old_precision);
}

std::string format_pattern(const Pattern& p) {
  std::ostringstream os;
  write_pattern(os, p);
  return os.str();
}

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

double parse_double(const std::string& token, const std::string& source, std::size_t line_no) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(source, line_no, "not a decimal amplitude: '" + token + "'");
  }
  return v;
}

}  // namespace

Pattern read_pattern(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  std::string name;
  int width = 0;
  int height = 0;
  bool have_header = false;
  std::vector<StencilCell> cells;
  while (std::getline(is, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> name >> width >> height)) {
        throw ParseError(source, line_no, "expected header 'name width height'");
      }
      have_header = true;
    } else {
      StencilCell c;
      std::string amp;
      if (!(ls >> c.dx >> c.dy >> amp)) {
        throw ParseError(source, line_no, "expected stencil line 'dx dy amplitude'");
      }
      if (amp == "?") {
        c.free = true;
      } else {
        c.amplitude = parse_double(amp, source, line_no);
      }
      cells.push_back(c);
    }
    std::string extra;
    if (ls >> extra) throw ParseError(source, line_no, "trailing token '" + extra + "'");
  }
  if (!have_header) throw ParseError(source, line_no, "missing pattern header");
  try {
    return Pattern(name, width, height, std::move(cells));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, line_no, e.what());
  }
}

Pattern parse_pattern(std::string_view text) {
  std::istringstream is{std::string(text)};
  return read_pattern(is);
}

Pattern load_pattern_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open pattern file '" + path + "'");
  return read_pattern(in, path);
}

void save_pattern_file(const std::string& path, const Pattern& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write pattern file '" + path + "'");
  write_pattern(out, p);
  if (!out) throw Error("write failed for '" + path + "'");
}

}  // namespace sqgol
