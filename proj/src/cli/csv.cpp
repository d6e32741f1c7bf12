#include <array>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "cli_internal.hpp"

namespace secrecy::cli {

std::string format_compact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string format_number(double v) {
  std::string s = format_compact(v);
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

void CsvWriter::comment(std::string_view text) { os_ << "# " << text << '\n'; }

void CsvWriter::header(const std::vector<std::string>& columns) {
  for (std::size_t i = 0; i < columns.size(); ++i) os_ << (i ? "," : "") << columns[i];
  os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << format_number(values[i]);
  os_ << '\n';
}

void CsvWriter::labelled(std::string_view label, double value) {
  os_ << label << ',' << format_number(value) << '\n';
}

void CsvWriter::labelled_count(std::string_view label, std::uint64_t value) {
  os_ << label << ',' << value << '\n';
}

}  // namespace secrecy::cli
