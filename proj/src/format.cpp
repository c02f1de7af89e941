#include "ldpc/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "ldpc/errors.hpp"

namespace ldpc {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  std::string s(buf, res.ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

double to_double(const mpq_class& value) {
  const int sign = sgn(value);
  if (sign == 0) return 0.0;
  long e_num = 0;
  long e_den = 0;
  const double m_num = mpz_get_d_2exp(&e_num, value.get_num_mpz_t());
  const double m_den = mpz_get_d_2exp(&e_den, value.get_den_mpz_t());
  const long shift = e_num - e_den;
  if (shift > std::numeric_limits<int>::max()) return sign * std::numeric_limits<double>::infinity();
  if (shift < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(m_num / m_den, static_cast<int>(shift));
}

nlohmann::json real_to_json(double value) {
  if (std::isfinite(value)) return value;
  return format_real(value);
}

double real_from_json(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw ParameterError("not a real: " + s);
}

nlohmann::json rational_to_json(const mpq_class& value) {
  return {{"numerator", value.get_num().get_str()},
          {"denominator", value.get_den().get_str()},
          {"approx", real_to_json(to_double(value))}};
}

mpq_class rational_from_json(const nlohmann::json& j) {
  mpq_class r(mpz_class(j.at("numerator").get<std::string>()), mpz_class(j.at("denominator").get<std::string>()));
  r.canonicalize();
  return r;
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << fields[i];
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

}  // namespace ldpc
