#include "edrb/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace edrb {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

CsvWriter::CsvWriter(std::ostream& out, std::string_view comment,
                     const std::vector<std::string>& header)
    : out_(out) {
  out_ << "# " << comment << '\n';
  for (const std::string& h : header) field(std::string_view(h));
  end_row();
}

CsvWriter& CsvWriter::field(double value) { return field(std::string_view(format_double(value))); }

CsvWriter& CsvWriter::field(long long value) {
  return field(std::string_view(std::to_string(value)));
}

CsvWriter& CsvWriter::field(std::string_view value) {
  if (!first_) out_ << ',';
  first_ = false;
  if (value.find_first_of(",\"\n") != std::string_view::npos) {
    out_ << '"';
    for (char c : value) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  } else {
    out_ << value;
  }
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  first_ = true;
}

}  // namespace edrb
