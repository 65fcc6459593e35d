#include "sqgol/io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace sqgol {

static_assert(std::endian::native == std::endian::little, "binary dumps assume a little-endian host");

std::uint8_t frame_pixel(double a) noexcept {
  const double v = std::floor(a * 255.0 + 0.5);
  if (!(v > 0.0)) return 0;
  if (v >= 255.0) return 255;
  return static_cast<std::uint8_t>(v);
}

template <Scalar T>
void write_frame(std::ostream& os, const Universe<T>& u) {
  os << "P5\n" << u.width() << ' ' << u.height() << "\n255\n";
  std::vector<char> row(static_cast<std::size_t>(u.width()));
  const auto cells = u.amplitudes();
  for (int y = 0; y < u.height(); ++y) {
    for (int x = 0; x < u.width(); ++x) {
      const T a = cells[static_cast<std::size_t>(y) * u.width() + x];
      row[static_cast<std::size_t>(x)] = static_cast<char>(frame_pixel(static_cast<double>(a)));
    }
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

template <Scalar T>
void export_frame(const Universe<T>& u, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_frame(out, u);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

StateFormat parse_state_format(std::string_view text) {
  if (text == "text") return StateFormat::kText;
  if (text == "binary") return StateFormat::kBinary;
  throw Error("unknown state format '" + std::string(text) + "' (expected text|binary)");
}

std::string_view to_string(StateFormat f) {
  return f == StateFormat::kText ? "text" : "binary";
}

namespace {

constexpr std::string_view kTextMagic = "sqgol-state 1";
constexpr std::array<char, 8> kBinaryMagic = {'S', 'Q', 'G', 'O', 'L', 'B', 'I', 'N'};

template <Scalar T>
std::string format_amplitude(T a) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), a, std::chars_format::general,
                                 std::numeric_limits<T>::max_digits10);
  return std::string(buf.data(), res.ptr);
}

void put_u32(std::ostream& os, std::uint32_t v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

bool get_exact(std::istream& is, void* dst, std::size_t n) {
  is.read(static_cast<char*>(dst), static_cast<std::streamsize>(n));
  return static_cast<std::size_t>(is.gcount()) == n;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <class V>
bool parse_number(std::string_view text, V& out) {
  const auto res = std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc() && res.ptr == text.data() + text.size();
}

std::string cell_name(std::size_t index, int width) {
  const auto w = static_cast<std::size_t>(width);
  return "(" + std::to_string(index % w) + "," + std::to_string(index / w) + ")";
}

std::string missing_cells(std::size_t have, std::size_t total, int width) {
  std::string msg = "truncated state: " + std::to_string(total - have) + " of " +
                    std::to_string(total) + " cells missing, first missing cell " +
                    cell_name(have, width);
  if (total - have > 1) msg += ", last " + cell_name(total - 1, width);
  return msg;
}

template <Scalar T>
Universe<T> read_text_cells(std::istream& is, const std::string& source, std::size_t& line_no,
                            int width, int height) {
  Universe<T> u(width, height);
  auto cells = u.mutable_amplitudes();
  std::size_t have = 0;
  std::string line;
  while (std::getline(is, line)) {
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    if (have == cells.size()) throw ParseError(source, line_no, "more cell records than size allows");
    if (tok.size() != 3) throw ParseError(source, line_no, "expected '<x> <y> <a>'");
    long long x = 0;
    long long y = 0;
    T a{};
    if (!parse_number(tok[0], x) || !parse_number(tok[1], y)) {
      throw ParseError(source, line_no, "malformed cell coordinates");
    }
    const std::string expected = cell_name(have, width);
    if ("(" + std::to_string(x) + "," + std::to_string(y) + ")" != expected) {
      throw ParseError(source, line_no, "expected cell " + expected + " (records are row-major)");
    }
    if (!parse_number(tok[2], a)) {
      throw ParseError(source, line_no, "malformed amplitude '" + std::string(tok[2]) + "'");
    }
    if (!(a >= T(0) && a <= T(1))) {
      throw ParseError(source, line_no, "amplitude outside [0,1] at cell " + expected);
    }
    cells[have++] = a;
  }
  if (have != cells.size()) throw ParseError(source, line_no, missing_cells(have, cells.size(), width));
  return u;
}

AnyUniverse read_text(std::istream& is, const std::string& source) {
  std::size_t line_no = 0;
  std::string line;
  auto next_header = [&](std::string_view key) {
    while (std::getline(is, line)) {
      ++line_no;
      const auto tok = tokens(line);
      if (tok.empty() || tok[0].front() == '#') continue;
      if (tok[0] != key) throw ParseError(source, line_no, "expected '" + std::string(key) + "' line");
      return tok;
    }
    throw ParseError(source, line_no, "missing '" + std::string(key) + "' line");
  };

  if (!std::getline(is, line) || line != kTextMagic) {
    throw ParseError(source, 1, "not a state dump (expected '" + std::string(kTextMagic) + "')");
  }
  line_no = 1;
  const auto size = next_header("size");
  int width = 0;
  int height = 0;
  if (size.size() != 3 || !parse_number(size[1], width) || !parse_number(size[2], height) ||
      width <= 0 || height <= 0) {
    throw ParseError(source, line_no, "expected 'size <width> <height>' with positive dimensions");
  }
  const auto prec = next_header("precision");
  if (prec.size() != 2) throw ParseError(source, line_no, "expected 'precision <single|double>'");
  Precision p{};
  try {
    p = parse_precision(prec[1]);
  } catch (const Error& e) {
    throw ParseError(source, line_no, e.what());
  }
  if (p == Precision::kSingle) return read_text_cells<float>(is, source, line_no, width, height);
  return read_text_cells<double>(is, source, line_no, width, height);
}

template <Scalar T>
Universe<T> read_binary_cells(std::istream& is, const std::string& source, int width, int height) {
  Universe<T> u(width, height);
  auto cells = u.mutable_amplitudes();
  is.read(reinterpret_cast<char*>(cells.data()), static_cast<std::streamsize>(cells.size_bytes()));
  const auto have = static_cast<std::size_t>(is.gcount()) / sizeof(T);
  if (have != cells.size()) throw ParseError(source, 0, missing_cells(have, cells.size(), width));
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!(cells[i] >= T(0) && cells[i] <= T(1))) {
      throw ParseError(source, 0, "amplitude outside [0,1] at cell " + cell_name(i, width));
    }
  }
  return u;
}

AnyUniverse read_binary(std::istream& is, const std::string& source) {
  std::array<char, 8> magic{};
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t prec = 0;
  if (!get_exact(is, magic.data(), magic.size()) || magic != kBinaryMagic) {
    throw ParseError(source, 0, "bad binary state magic");
  }
  if (!get_exact(is, &width, sizeof width) || !get_exact(is, &height, sizeof height) ||
      !get_exact(is, &prec, sizeof prec)) {
    throw ParseError(source, 0, "truncated binary state header");
  }
  constexpr auto kMax = static_cast<std::uint32_t>(std::numeric_limits<int>::max());
  if (width == 0 || height == 0 || width > kMax || height > kMax) {
    throw ParseError(source, 0, "invalid binary state dimensions");
  }
  const int w = static_cast<int>(width);
  const int h = static_cast<int>(height);
  if (prec == 0) return read_binary_cells<float>(is, source, w, h);
  if (prec == 1) return read_binary_cells<double>(is, source, w, h);
  throw ParseError(source, 0, "invalid binary state precision byte");
}

}  // namespace

template <Scalar T>
void dump_state(std::ostream& os, const Universe<T>& u, StateFormat format) {
  if (format == StateFormat::kBinary) {
    os.write(kBinaryMagic.data(), kBinaryMagic.size());
    put_u32(os, static_cast<std::uint32_t>(u.width()));
    put_u32(os, static_cast<std::uint32_t>(u.height()));
    const char prec = precision_of<T>() == Precision::kSingle ? 0 : 1;
    os.write(&prec, 1);
    const auto cells = u.amplitudes();
    os.write(reinterpret_cast<const char*>(cells.data()),
             static_cast<std::streamsize>(cells.size_bytes()));
    return;
  }
  os << kTextMagic << '\n'
     << "size " << u.width() << ' ' << u.height() << '\n'
     << "precision " << to_string(precision_of<T>()) << '\n';
  std::size_t i = 0;
  for (int y = 0; y < u.height(); ++y) {
    for (int x = 0; x < u.width(); ++x) {
      os << x << ' ' << y << ' ' << format_amplitude(u.amplitudes()[i++]) << '\n';
    }
  }
}

template <Scalar T>
void save_state(const Universe<T>& u, const std::filesystem::path& path, StateFormat format) {
  auto out = open_output(path);
  dump_state(out, u, format);
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

AnyUniverse load_state(std::istream& is, const std::string& source) {
  const int first = is.peek();
  if (first == std::char_traits<char>::to_int_type(kBinaryMagic[0])) return read_binary(is, source);
  return read_text(is, source);
}

AnyUniverse load_state_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return load_state(in, path.string());
}

template <Scalar T>
Universe<T> load_state_as(std::istream& is, const std::string& source) {
  AnyUniverse any = load_state(is, source);
  if (auto* u = std::get_if<Universe<T>>(&any)) return std::move(*u);
  throw Error(source + ": state precision is not " + std::string(to_string(precision_of<T>())));
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

template void write_frame<float>(std::ostream&, const Universe<float>&);
template void write_frame<double>(std::ostream&, const Universe<double>&);
template void export_frame<float>(const Universe<float>&, const std::filesystem::path&);
template void export_frame<double>(const Universe<double>&, const std::filesystem::path&);
template void dump_state<float>(std::ostream&, const Universe<float>&, StateFormat);
template void dump_state<double>(std::ostream&, const Universe<double>&, StateFormat);
template void save_state<float>(const Universe<float>&, const std::filesystem::path&, StateFormat);
template void save_state<double>(const Universe<double>&, const std::filesystem::path&, StateFormat);
template Universe<float> load_state_as<float>(std::istream&, const std::string&);
template Universe<double> load_state_as<double>(std::istream&, const std::string&);

}  // namespace sqgol
