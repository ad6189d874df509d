#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace edrb {

inline constexpr std::string_view kToolVersion = "edrb 1.0.0";

// Shortest round-trip-safe text with 17 significant digits, '.' separator,
// independent of the global locale.
std::string format_double(double value);

class CsvWriter {
 public:
  // Writes "# <comment>" then the header row.
  CsvWriter(std::ostream& out, std::string_view comment,
            const std::vector<std::string>& header);

  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(std::string_view value);
  void end_row();

 private:
  std::ostream& out_;
  bool first_ = true;
};

}  // namespace edrb
