#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lungkb {

std::string to_lower(std::string s);
std::string trim(const std::string& s);

/// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_whitespace(const std::string& s);

bool starts_with(const std::string& s, const std::string& prefix);
bool contains(const std::string& haystack, const std::string& needle);

std::vector<std::string> split(const std::string& s, char sep);
std::string join(const std::vector<std::string>& parts, const std::string& sep);

/// Decimal rendering used everywhere a millimetre/SUV value is written out:
/// integral values keep one decimal place ("13.0"), everything else uses the
/// shortest representation that round-trips ("12.95").
std::string format_decimal(double value);

/// FNV-1a 64-bit over raw bytes.
std::uint64_t fnv1a64(const std::string& bytes);

/// fnv1a64 rendered as 16 lowercase hex characters.
std::string fnv1a64_hex(const std::string& bytes);

/// Reads a whole file; throws IoFailure.
std::string read_file(const std::string& path);

/// Writes a whole file; throws IoFailure.
void write_file(const std::string& path, const std::string& contents);

/// Reads a file as lines (newline-stripped). Blank lines are preserved so
/// callers can report accurate line numbers.
std::vector<std::string> read_lines(const std::string& path);

/// Parses "March 5, 2021" / "Mar 5 2021" / "03/05/2021" / "2021-03-05" into
/// ISO 8601. Returns nullopt when the text is not a recognizable date.
std::optional<std::string> parse_date_iso(const std::string& raw);

} // namespace lungkb
