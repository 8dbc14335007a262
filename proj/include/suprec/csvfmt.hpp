#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace suprec {

// Fixed rendering rule for all CSV numbers: 9 significant digits, '.'
// decimal point, no locale dependence.
std::string format_sig9(double value);
std::string format_sig9(std::optional<double> value);  // empty when absent
std::string format_u64(std::uint64_t value);
std::string format_int(int value);

// Joins fields with commas and terminates the row with LF.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace suprec
