#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace molsim::io {

/// Shortest representation that round-trips, locale independent.
/// Non-finite values print as nan, inf, -inf.
std::string format_double(double value);

/// Strict decimal parse of the whole string (no surrounding space).
std::optional<double> parse_double(std::string_view text);
std::optional<unsigned long long> parse_unsigned(std::string_view text);

struct CsvRecord {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: quoted fields may contain commas, doubled quotes and line
/// breaks; CRLF is accepted. Blank lines are skipped. Throws ParseError on an
/// unterminated quote or stray characters after a closing quote.
std::vector<CsvRecord> read_csv(std::istream& in);

/// Quotes the field if it contains a comma, quote or line break.
std::string csv_field(std::string_view text);

/// Header line plus one row per index; every column must have the same length.
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& columns);

/// Writes via a sibling temporary file and rename, so readers never see a
/// partial file. Creates parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace molsim::io
