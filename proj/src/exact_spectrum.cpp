#include "ldpc/exact_spectrum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ldpc/errors.hpp"
#include "ldpc/growth_rate.hpp"

namespace ldpc {

namespace {

void require_cap(const EnsembleParams& params, const SpectrumOptions& options) {
  if (params.n > options.n_cap) {
    throw CapacityError("block length n = " + std::to_string(params.n) + " exceeds the cap of " +
                        std::to_string(options.n_cap));
  }
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

mpq_class make_ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

std::vector<mpz_class> binomial_row(std::uint64_t n) {
  std::vector<mpz_class> row(n + 1);
  row[0] = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    row[k + 1] = row[k] * static_cast<unsigned long>(n - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return row;
}

mpz_class check_weight_factor(std::uint32_t q, std::uint32_t i) {
  const mpz_class qm1 = q - 1;
  mpz_class num = ipow(qm1, i);
  if (i % 2 == 0) {
    num += qm1;
  } else {
    num -= qm1;
  }
  if (!mpz_divisible_ui_p(num.get_mpz_t(), q)) {
    throw std::logic_error("B(" + std::to_string(i) + ") is not integral for q = " + std::to_string(q));
  }
  mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), q);
  return num;
}

CheckCoeffTable check_coeffs(std::uint32_t q, std::uint32_t d, std::uint32_t checks, std::uint32_t max_index) {
  require_prime_power(q);
  if (d < 1 || checks < 1) throw ParameterError("check_coeffs requires d >= 1 and N >= 1");

  // Single-check generating polynomial sum_i C(d,i) B(i) x^i; its constant
  // term is 1 and its linear term is 0.
  std::vector<mpz_class> base(std::min(d, max_index) + 1);
  for (std::uint32_t i = 0; i < base.size(); ++i) base[i] = binomial(d, i) * check_weight_factor(q, i);

  CheckCoeffTable table;
  table.q = q;
  table.d = d;
  table.checks = checks;
  table.coeffs.assign(std::size_t{max_index} + 1, 0);
  table.coeffs[0] = 1;

  // Multiply by the base polynomial in place, highest index first so the
  // lower entries still hold the previous row.
  for (std::uint64_t step = 1; step <= checks; ++step) {
    const std::uint64_t top = std::min<std::uint64_t>(max_index, step * d);
    for (std::uint64_t m = top; m >= 1; --m) {
      mpz_class& dst = table.coeffs[m];
      for (std::uint64_t i = 1; i < base.size() && i <= m; ++i) {
        if (sgn(base[i]) == 0) continue;
        mpz_addmul(dst.get_mpz_t(), base[i].get_mpz_t(), table.coeffs[m - i].get_mpz_t());
      }
    }
  }
  return table;
}

SpectrumTable avg_weight_distribution(const EnsembleParams& params, const SpectrumOptions& options) {
  params.validate();
  require_cap(params, options);
  const std::uint32_t n = params.n;
  const std::uint32_t c = params.c;
  const auto coeffs = check_coeffs(params.q, params.d, params.checks(), params.sockets()).coeffs;
  const auto binom_n = binomial_row(n);
  const auto binom_cn = binomial_row(params.sockets());
  const mpz_class step = ipow(params.q - 1, c - 1);

  SpectrumTable table;
  table.params = params;
  table.values.resize(n + 1);
  mpz_class power = 1;  // (q-1)^{(c-1)l}
  for (std::uint32_t l = 0; l <= n; ++l) {
    const std::size_t m = std::size_t{c} * l;
    table.values[l] = make_ratio(binom_n[l] * coeffs[m], binom_cn[m] * power);
    power *= step;
  }
  return table;
}

mpq_class avg_weight(const EnsembleParams& params, std::uint32_t l, const SpectrumOptions& options) {
  params.validate();
  require_cap(params, options);
  if (l > params.n) throw ParameterError("weight l exceeds n");
  const std::uint32_t m = params.c * l;
  const auto table = check_coeffs(params.q, params.d, params.checks(), m);
  const mpz_class den = binomial(params.sockets(), m) * ipow(params.q - 1, std::uint64_t{params.c - 1} * l);
  return make_ratio(binomial(params.n, l) * table.coeffs[m], den);
}

SpectrumTable avg_weight_d2(const EnsembleParams& params, const SpectrumOptions& options) {
  params.validate();
  if (params.d != 2) throw ParameterError("closed form applies to d = 2 only, got " + params.to_string());
  require_cap(params, options);
  const std::uint32_t n = params.n;
  const std::uint32_t c = params.c;
  const mpz_class qm1 = params.q - 1;

  SpectrumTable table;
  table.params = params;
  table.values.assign(n + 1, mpq_class(0));
  for (std::uint32_t l = 0; l <= n; ++l) {
    const std::uint64_t cl = std::uint64_t{c} * l;
    if (cl % 2 != 0) continue;
    mpz_class num = binomial(n, l) * binomial(params.sockets() / 2, cl / 2);
    mpz_class den = binomial(params.sockets(), cl);
    // (q-1)^{(c/2 - 1) l} with the exponent (cl - 2l)/2 possibly negative.
    const long long e = (static_cast<long long>(cl) - 2LL * l) / 2;
    if (e >= 0) {
      den *= ipow(qm1, static_cast<unsigned long>(e));
    } else {
      num *= ipow(qm1, static_cast<unsigned long>(-e));
    }
    table.values[l] = make_ratio(num, den);
  }
  return table;
}

double beta(std::uint64_t n, std::uint64_t l) {
  if (n == 0 || l > n) throw DomainError("beta requires 0 <= l <= n, n >= 1");
  if (l == 0 || l == n) return 0.0;
  const double nd = static_cast<double>(n);
  const double log_binom = std::lgamma(nd + 1.0) - std::lgamma(l + 1.0) - std::lgamma(nd - l + 1.0);
  return entropy_q(static_cast<double>(l) / nd, 2) - log_binom / nd;
}

double beta_upper_bound(std::uint64_t n, std::uint64_t l) {
  if (!(l > 0 && l < n)) throw DomainError("beta bound requires 0 < l < n");
  const double nd = static_cast<double>(n);
  const double ld = static_cast<double>(l);
  const double rest = nd - ld;
  const double stirling = 0.5 * std::log(2.0 * std::numbers::pi) + 1.0 / (12.0 * ld) + 1.0 / (12.0 * rest) -
                          1.0 / (12.0 * nd + 1.0);
  return std::log(ld * rest / nd) / (2.0 * nd) + stirling / nd;
}

double log_avg_upper_bound(const EnsembleParams& params, std::uint32_t l) {
  params.validate();
  if (params.d < 2) throw ParameterError("the growth-rate bound requires d >= 2");
  if (l > params.n) throw ParameterError("weight l exceeds n");
  const double x = static_cast<double>(l) / params.n;
  return omega(params.q, params.c, params.d, x) +
         params.c * beta(params.sockets(), std::uint64_t{params.c} * l);
}

double log_integer(const mpz_class& value) {
  if (sgn(value) < 0) throw DomainError("log of a negative number");
  if (sgn(value) == 0) return -kInf;
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

double log_rational(const mpq_class& value) {
  return log_integer(value.get_num()) - log_integer(value.get_den());
}

bool small_weight_vanishes(std::uint32_t q, std::uint32_t c, std::uint32_t l) {
  return (c == 1 && l == 1) || (q == 2 && (std::uint64_t{c} * l) % 2 == 1);
}

int small_weight_exponent(std::uint32_t c, std::uint32_t l) {
  const long long a = (static_cast<long long>(c) - 2) * l;
  const long long ceil_half = a >= 0 ? (a + 1) / 2 : -((-a) / 2);
  return static_cast<int>(-ceil_half);
}

ScalingFit small_weight_scaling(std::uint32_t q, std::uint32_t c, std::uint32_t d, std::uint32_t l,
                                std::span<const std::uint32_t> n_list, const SpectrumOptions& options) {
  if (l < 1) throw ParameterError("small-weight scaling requires l >= 1");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw ParameterError("n_list must be strictly increasing");
  }
  ScalingFit fit;
  std::vector<double> xs;
  std::vector<double> ys;
  for (const std::uint32_t n : n_list) {
    const EnsembleParams params = make_params(q, c, d, n);
    if (l > n) throw ParameterError("weight l exceeds n = " + std::to_string(n));
    mpq_class value = avg_weight(params, l, options);
    if (sgn(value) > 0) {
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(log_rational(value));
    }
    fit.values.emplace_back(n, std::move(value));
  }
  if (!fit.values.empty() && xs.empty()) {
    fit.exact_zero = true;
    return fit;
  }
  if (xs.size() < 3) throw ParameterError("slope fit needs at least 3 points with E[A(l)] > 0");

  const double k = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= k;
  my /= k;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

}  // namespace ldpc
