#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace ldpc {

// Growth-rate quantities are extended reals: +/-infinity are ordinary
// return values (the -inf region of omega, infinite derivative limits).
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// H_q(x) = -x ln x - (1-x) ln(1-x) + x ln(q-1), with 0 ln 0 = 0.
double entropy_q(double x, std::uint32_t q);
/// D(x||y) = x ln(x/y) + (1-x) ln((1-x)/(1-y)); +inf when y is 0 or 1 and
/// the matching numerator is nonzero.
double divergence(double x, double y);

/// z = 1 - qx/(q-1) and its inverse.
double to_z(std::uint32_t q, double x);
double to_x(std::uint32_t q, double z);

/// rho_{q,d}(x) = ln[1 + (q-1)(1 - qx/(q-1))^d]; -inf at x = 1 for q = 2, odd d.
double rho(std::uint32_t q, std::uint32_t d, double x);

/// zeta_{q,d}(zhat) = (zhat + zhat^{d-1} + (q-2) zhat^d) / (1 + (q-1) zhat^d),
/// continuous at zhat = -1 when q = 2 and d is odd.
double zeta(std::uint32_t q, std::uint32_t d, double zhat);
/// Derivative of zeta.
double zeta_prime(std::uint32_t q, std::uint32_t d, double zhat);

/// Left end z1 of zeta's range: 2/d - 1 for q = 2 and odd d, else -1/(q-1).
double zeta_range_start(std::uint32_t q, std::uint32_t d);
/// Right end x1 of omega's finite domain: 1 - 1/d for q = 2 and odd d, else 1.
double domain_end(std::uint32_t q, std::uint32_t d);

/// The unique solution of zeta(zhat) = z in [-1/(q-1), 1].
/// Throws DomainError for z outside [z1, 1].
double solve_zhat1(std::uint32_t q, std::uint32_t d, double z);

/// delta_{q,d}(x, xhat) = d D(x||xhat) + rho_{q,d}(xhat).
double delta_two_arg(std::uint32_t q, std::uint32_t d, double x, double xhat);

struct DeltaEval {
  double x = 0.0;
  double z = 0.0;
  double zhat1 = 0.0;  // stationary point (or its limit at the endpoints)
  double xhat1 = 0.0;
  double delta = 0.0;
};

/// delta_{q,d}(x) = inf over xhat in (0,1) of delta_{q,d}(x, xhat), d >= 3.
DeltaEval delta(std::uint32_t q, std::uint32_t d, double x);

struct GrowthPoint {
  double x = 0.0;
  double omega = 0.0;
  double domega = 0.0;
};

/// omega_{q,c,d}(x) = H_q(x) + (c/d)[delta_{q,d}(x) - ln q].
/// For d = 2 the infimum has the closed form delta = ln q - H_q(x), so
/// omega = (1 - c/2) H_q(x).
double omega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x);
GrowthPoint growth_point(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x);

/// d omega / dx. At (or within 1e-8 of) 0 and x1 the one-sided limits are
/// returned; in the -inf region the result is NaN.
double domega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x);

/// The derivative evaluated by the two closed forms: in terms of (x, xhat1)
/// and in terms of zhat1 alone. Interior x only.
struct DerivativeForms {
  double in_x = 0.0;
  double in_zhat = 0.0;
};
DerivativeForms domega_forms(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x);

/// Second derivative through the chain rule d/dzhat(domega) * dzhat1/dx.
double d2omega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x);

/// Integer coefficients (ascending powers) of the curvature polynomial
///   xi(z) = sum_{i<d-2} z^i - K z^{d-2} - (q-1) K z^{d-1} + (q-1) sum_{i=d}^{2d-3} z^i,
/// K = (c-1)(d-1) - 1.
std::vector<long long> xi_coefficients(std::uint32_t q, std::uint32_t c, std::uint32_t d);
double xi(std::uint32_t q, std::uint32_t c, std::uint32_t d, double zhat);

/// Landmark points of omega. Fields not defined for the (q, c, d) regime are
/// left empty.
struct Landmarks {
  std::uint32_t q = 2, c = 1, d = 3;
  double x1 = 1.0;                  // right end of the finite domain
  double z1 = -1.0;                 // left end of zeta's range
  std::optional<double> zhat2;      // zero of xi in (0, 1)
  std::optional<double> zhat2_neg;  // zero of xi in (-1, 0): q = 2, even d, c >= 3
  std::optional<double> x2;         // inflection point
  std::optional<double> x3;         // minimizer of omega
  std::optional<double> x0;         // zero of omega in (0, 1 - 1/q]
};

/// Requires d >= max(c, 3).
Landmarks landmarks(std::uint32_t q, std::uint32_t c, std::uint32_t d);

/// Root of H_q(x) = r ln q in (0, 1 - 1/q], r in (0, 1].
double gv_threshold(std::uint32_t q, double r);

}  // namespace ldpc
