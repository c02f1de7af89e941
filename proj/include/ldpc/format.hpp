#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace ldpc {

/// Shortest decimal that round-trips to the same double. Integral values
/// keep a trailing ".0"; non-finite values print as "inf", "-inf", "nan".
std::string format_real(double value);

/// Nearest double to a rational, overflowing to +-inf instead of failing.
double to_double(const mpq_class& value);

/// A finite real as a JSON number, otherwise the string of format_real.
nlohmann::json real_to_json(double value);
double real_from_json(const nlohmann::json& j);

/// {"numerator": "...", "denominator": "...", "approx": ...}
nlohmann::json rational_to_json(const mpq_class& value);
mpq_class rational_from_json(const nlohmann::json& j);

/// Header plus rows, comma-separated, LF line endings. Fields are written
/// verbatim (no field here ever contains a comma or quote).
void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace ldpc
