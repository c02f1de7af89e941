#include "ldpc/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ldpc/errors.hpp"
#include "ldpc/exact_spectrum.hpp"
#include "ldpc/growth_rate.hpp"

namespace ldpc {

double kappa(std::uint32_t q, std::uint32_t c, std::uint32_t d) {
  if (q < 2 || c < 1 || d < 2) throw ParameterError("kappa requires q >= 2, c >= 1, d >= 2");
  return std::log(q - 1.0) + 0.5 * c * std::log(d - 1.0) + 3.0 * c;
}

MarginReport smallx_inequality_margin(std::uint32_t q, std::uint32_t c, std::uint32_t d,
                                      std::span<const double> x_grid) {
  const double k = kappa(q, c, d);
  const double upper = 1.0 / (static_cast<double>(q) * q);
  MarginReport report;
  report.min_margin = std::numeric_limits<double>::infinity();
  report.margins.reserve(x_grid.size());
  for (const double x : x_grid) {
    if (!(x > 0.0 && x < upper)) {
      throw DomainError("grid point " + std::to_string(x) + " outside (0, 1/q^2)");
    }
    const double rhs = (c / 2.0 - 1.0) * x * std::log(x) + k * x;
    const double margin = rhs - omega(q, c, d, x);
    report.margins.push_back(margin);
    report.min_margin = std::min(report.min_margin, margin);
  }
  return report;
}

int weight_parity_shift(std::uint32_t q, std::uint32_t c, std::uint32_t l0) {
  return q == 2 && (std::uint64_t{c} * l0) % 2 == 1 ? 1 : 0;
}

MinDistanceBoundReport conditioned_min_distance_bound(const EnsembleParams& params, std::uint32_t l0, double alpha,
                                                      double phi) {
  params.validate();
  const auto [q, c, d, n] = params;
  if (!(d >= c && c >= 3)) throw ParameterError("minimum-distance bound requires d >= c >= 3");
  if (l0 < 1) throw ParameterError("l0 must be at least 1");
  const double mid = (q - 1.0) / q;
  if (!(alpha > 0.0 && alpha < mid)) throw ParameterError("alpha must lie in (0, 1 - 1/q)");
  if (!(phi > 0.0 && phi <= 1.0)) throw ParameterError("phi must lie in (0, 1]");

  MinDistanceBoundReport r;
  r.params = params;
  r.l0 = l0;
  r.alpha = alpha;
  r.phi = phi;
  r.delta = weight_parity_shift(q, c, l0);
  r.exponent_term = small_weight_exponent(c, l0 + r.delta);
  const double nd = static_cast<double>(n);
  r.poly_term = std::pow(nd, r.exponent_term) / phi;
  r.omega_alpha = omega(q, c, d, alpha);
  r.exp_term = std::exp(1.5 * std::log(nd) + nd * r.omega_alpha) / phi;
  return r;
}

MinDistanceBoundReport min_distance_bound(const EnsembleParams& params, std::uint32_t l0, double alpha) {
  return conditioned_min_distance_bound(params, l0, alpha, 1.0);
}

MinDistanceBoundReport no_zero_column_bound(const EnsembleParams& params, double alpha) {
  return conditioned_min_distance_bound(params, 2, alpha, 1.0);
}

double taylor_check(std::uint32_t d, std::span<const double> x_grid) {
  if (d < 1) throw ParameterError("taylor_check requires d >= 1");
  double slack = std::numeric_limits<double>::infinity();
  for (const double x : x_grid) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("taylor_check grid must lie in [0, 1]");
    // The slack is x^3 sum_{j=0}^{d-3} C(d, j+3) (-x)^j; evaluated this way
    // the cancellation of the leading terms is exact.
    double inner = 0.0;
    double binom = 1.0;  // C(d, d) walking down to C(d, 3)
    for (std::uint32_t k = d; k >= 3; --k) {
      inner = inner * -x + binom;
      binom = binom * k / (d - k + 1.0);
    }
    slack = std::min(slack, x * x * x * inner);
  }
  return slack;
}

}  // namespace ldpc
