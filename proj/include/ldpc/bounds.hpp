#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ldpc/ensemble_params.hpp"

namespace ldpc {

/// kappa_{q,c,d} = ln(q-1) + (c/2) ln(d-1) + 3c.
double kappa(std::uint32_t q, std::uint32_t c, std::uint32_t d);

struct MarginReport {
  double min_margin = 0.0;
  /// (c/2 - 1) x ln x + kappa x - omega(x) at each grid point.
  std::vector<double> margins;
};

/// Slack of omega(x) < (c/2 - 1) x ln x + kappa x on a grid inside
/// (0, 1/q^2). Throws DomainError for a point outside the open interval.
MarginReport smallx_inequality_margin(std::uint32_t q, std::uint32_t c, std::uint32_t d,
                                      std::span<const double> x_grid);

/// Structural terms of the minimum-distance bound
///   P{l0 <= dmin <= n alpha} <= Theta(n^{exponent_term}) + Theta(n^{3/2} e^{n omega(alpha)}).
/// The Theta constants are not known, so the terms are exponent proxies for
/// comparison with simulation, never certified probabilities.
struct MinDistanceBoundReport {
  EnsembleParams params;
  std::uint32_t l0 = 1;
  double alpha = 0.0;
  int delta = 0;          // 1 iff q = 2 and c*l0 is odd
  int exponent_term = 0;  // -ceil((c-2)(l0 + delta)/2)
  double poly_term = 0.0; // n^{exponent_term}
  double omega_alpha = 0.0;
  double exp_term = 0.0;  // n^{3/2} e^{n omega(alpha)}, may underflow to 0
  /// Divisor phi(n) for the conditioned bound (1 when unconditioned).
  double phi = 1.0;
};

/// Requires d >= c >= 3, l0 >= 1 and alpha in (0, 1 - 1/q).
MinDistanceBoundReport min_distance_bound(const EnsembleParams& params, std::uint32_t l0, double alpha);

/// The bound conditioned on a code filter that guarantees dmin >= l0 and
/// passes with probability Theta(phi): both terms are divided by phi.
/// The built-in filter (no all-zero column in the parity-check matrix) is
/// l0 = 2, phi = 1, giving Theta(n^{2-c}) + Theta(n^{3/2} e^{n omega(alpha)}).
MinDistanceBoundReport conditioned_min_distance_bound(const EnsembleParams& params, std::uint32_t l0, double alpha,
                                                      double phi);
MinDistanceBoundReport no_zero_column_bound(const EnsembleParams& params, double alpha);

/// Delta of the bound: 1 iff q = 2 and c*l0 is odd.
int weight_parity_shift(std::uint32_t q, std::uint32_t c, std::uint32_t l0);

/// Minimum over the grid of 1 - dx + d(d-1)x^2/2 - (1-x)^d.
double taylor_check(std::uint32_t d, std::span<const double> x_grid);

}  // namespace ldpc
