#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "sqgol/universe.hpp"

namespace sqgol {

/// Gray level of an amplitude: floor(a * 255 + 0.5), i.e. round half up, so
/// 0 -> 0, 1 -> 255 and 0.5 -> 128.
std::uint8_t frame_pixel(double a) noexcept;

/// Binary PGM (P5, maxval 255), rows top to bottom, one byte per cell.
template <Scalar T>
void write_frame(std::ostream& os, const Universe<T>& u);

template <Scalar T>
void export_frame(const Universe<T>& u, const std::filesystem::path& path);

enum class StateFormat { kText, kBinary };

StateFormat parse_state_format(std::string_view text);
std::string_view to_string(StateFormat f);

/// State dumps.
///
/// Text:
///   sqgol-state 1
///   size <width> <height>
///   precision <single|double>
///   <x> <y> <a>        one record per cell, row-major, a with max_digits10
///
/// Binary: the 8-byte magic "SQGOLBIN", u32 width, u32 height, u8 precision
/// (0 single, 1 double), then width*height raw little-endian IEEE values.
///
/// Both formats reproduce the amplitudes bit for bit.
template <Scalar T>
void dump_state(std::ostream& os, const Universe<T>& u, StateFormat format = StateFormat::kText);

template <Scalar T>
void save_state(const Universe<T>& u, const std::filesystem::path& path,
                StateFormat format = StateFormat::kText);

using AnyUniverse = std::variant<Universe<float>, Universe<double>>;

/// Reads either format (detected from the first bytes). Malformed input
/// throws ParseError with the offending line (text) or byte offset context
/// (binary, reported as line 0); a truncated dump names the first missing cell.
AnyUniverse load_state(std::istream& is, const std::string& source = "<state>");
AnyUniverse load_state_file(const std::filesystem::path& path);

/// load_state converted to T; throws if the stored precision differs.
template <Scalar T>
Universe<T> load_state_as(std::istream& is, const std::string& source = "<state>");

/// Opens `path` for binary writing, throwing sqgol::Error on failure.
std::ofstream open_output(const std::filesystem::path& path);
std::ifstream open_input(const std::filesystem::path& path);

}  // namespace sqgol
