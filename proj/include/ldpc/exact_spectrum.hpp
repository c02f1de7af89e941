#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ldpc/ensemble_params.hpp"

namespace ldpc {

/// Coefficients A(N, m), m = 0..M, of
///   g_{q,d}^{(N)}(x) = q^{-N} {[1 + (q-1)x]^d + (q-1)(1-x)^d}^N,
/// i.e. the number of weight-m words in the kernel of N parallel
/// single-symbol checks of degree d.
struct CheckCoeffTable {
  std::uint32_t q = 2;
  std::uint32_t d = 1;
  std::uint32_t checks = 0;  // N
  std::vector<mpz_class> coeffs;
};

/// Exact ensemble-average weight distribution E[A(l)], l = 0..n.
struct SpectrumTable {
  EnsembleParams params;
  std::vector<mpq_class> values;
};

struct SpectrumOptions {
  /// Largest block length accepted before a CapacityError.
  std::uint32_t n_cap = 2000;
};

/// C(n, k) with exact integers (multiplicative formula).
mpz_class binomial(std::uint64_t n, std::uint64_t k);
/// C(n, k) for k = 0..n.
std::vector<mpz_class> binomial_row(std::uint64_t n);

/// B(i) = ((q-1)^i + (-1)^i (q-1)) / q: the number of vectors in
/// (GF(q)*)^i whose symbols sum to zero.
mpz_class check_weight_factor(std::uint32_t q, std::uint32_t i);

/// A(N, m) for m = 0..M via A(N+1, m) = sum_i C(d, i) A(N, m-i) B(i).
/// Memory is O(M) big integers.
CheckCoeffTable check_coeffs(std::uint32_t q, std::uint32_t d, std::uint32_t checks, std::uint32_t max_index);

/// Full table E[A(l)], l = 0..n. Throws CapacityError if n > options.n_cap.
SpectrumTable avg_weight_distribution(const EnsembleParams& params, const SpectrumOptions& options = {});

/// A single entry E[A(l)]; only coefficients up to c*l are computed.
mpq_class avg_weight(const EnsembleParams& params, std::uint32_t l, const SpectrumOptions& options = {});

/// Closed form for d = 2 (independent of the coefficient recurrence).
SpectrumTable avg_weight_d2(const EnsembleParams& params, const SpectrumOptions& options = {});

/// beta_n(l) = H_2(l/n) - (1/n) ln C(n, l).
double beta(std::uint64_t n, std::uint64_t l);

/// Explicit upper bound on beta_n(l) for 0 < l < n from Stirling's formula
/// with 1/(12m+1) < lambda_m < 1/(12m):
///   (1/2n) ln(l(n-l)/n) + (1/n)[ln(2 pi)/2 + 1/(12l) + 1/(12(n-l)) - 1/(12n+1)].
double beta_upper_bound(std::uint64_t n, std::uint64_t l);

/// omega(l/n) + c * beta_{cn}(cl), an upper bound on (1/n) ln E[A(l)].
/// Requires d >= 2.
double log_avg_upper_bound(const EnsembleParams& params, std::uint32_t l);

/// Natural log of a nonnegative rational; -inf for zero.
double log_rational(const mpq_class& value);
double log_integer(const mpz_class& value);

/// True when E[A(l)] vanishes identically for every n: c = 1 and l = 1, or
/// q = 2 and c*l odd.
bool small_weight_vanishes(std::uint32_t q, std::uint32_t c, std::uint32_t l);

/// Predicted exponent -ceil((c-2) l / 2) of n in E[A(l)].
int small_weight_exponent(std::uint32_t c, std::uint32_t l);

struct ScalingFit {
  /// Every computed value is exactly zero.
  bool exact_zero = false;
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<std::pair<std::uint32_t, mpq_class>> values;
};

/// Least-squares slope of ln E[A(l)] against ln n over n_list (points with
/// E = 0 are dropped). Throws ParameterError when fewer than 3 points are
/// usable and the values are not all zero.
ScalingFit small_weight_scaling(std::uint32_t q, std::uint32_t c, std::uint32_t d, std::uint32_t l,
                                std::span<const std::uint32_t> n_list, const SpectrumOptions& options = {});

}  // namespace ldpc
