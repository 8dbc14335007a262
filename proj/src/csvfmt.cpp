#include "suprec/csvfmt.hpp"

#include <cstdio>

namespace suprec {

std::string format_sig9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string format_sig9(std::optional<double> value) {
  return value ? format_sig9(*value) : std::string();
}

std::string format_u64(std::uint64_t value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%llu", static_cast<unsigned long long>(value));
  return buf;
}

std::string format_int(int value) { return std::to_string(value); }

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

}  // namespace suprec
