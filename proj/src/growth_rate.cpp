#include "ldpc/growth_rate.hpp"

#include <cmath>
#include <string>

#include "ldpc/ensemble_params.hpp"
#include "ldpc/errors.hpp"
#include "ldpc/root_finding.hpp"

namespace ldpc {

namespace {

// Points this close to 0 or x1 get the analytic endpoint values; the
// stationary point runs into the ends of its range there.
constexpr double kNearEnd = 1e-8;
// Points this close to a special abscissa are treated as that abscissa.
constexpr double kSnap = 1e-12;

const BisectOptions kFullPrecision{0.0, 200};

double ipow(double base, std::uint32_t e) {
  double result = 1.0;
  for (; e > 0; e >>= 1) {
    if (e & 1u) result *= base;
    base *= base;
  }
  return result;
}

bool odd_binary(std::uint32_t q, std::uint32_t d) { return q == 2 && d % 2 == 1; }

// sum_{i=0}^{m} z^i
double geometric_sum(double z, std::uint32_t m) {
  double s = 0.0;
  for (std::uint32_t i = 0; i <= m; ++i) s = s * z + 1.0;
  return s;
}

// (1 + z^d) / (1 + z) = sum_{i<d} (-z)^i for odd d.
double alternating_sum(double z, std::uint32_t d) { return geometric_sum(-z, d - 1); }

void require_delta_params(std::uint32_t q, std::uint32_t d) {
  require_prime_power(q);
  if (d < 3) throw ParameterError("delta requires d >= 3, got d = " + std::to_string(d));
}

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " must lie in [0, 1], got " + std::to_string(x));
  }
}

// The x whose stationary point is xhat, valid for xhat <= 1 - 1/q:
//   x = xhat (1 - zhat^{d-1}) / (1 + (q-1) zhat^d),  1 - zhat = u.
double x_of_xhat(std::uint32_t q, std::uint32_t d, double xhat) {
  const double u = q * xhat / (q - 1.0);
  const double zh = 1.0 - u;
  return xhat * u * geometric_sum(zh, d - 2) / (1.0 + (q - 1.0) * ipow(zh, d));
}

// 1 - x for the x whose stationary point is xhat, valid for xhat >= 1 - 1/q:
//   1 - x = (1 - xhat)(1 + (q-1) zhat^{d-1}) / (1 + (q-1) zhat^d).
double one_minus_x_of_xhat(std::uint32_t q, std::uint32_t d, double xhat) {
  const double zh = 1.0 - q * xhat / (q - 1.0);
  if (odd_binary(q, d)) return (1.0 + ipow(zh, d - 1)) / (2.0 * alternating_sum(zh, d));
  return (1.0 - xhat) * (1.0 + (q - 1.0) * ipow(zh, d - 1)) / (1.0 + (q - 1.0) * ipow(zh, d));
}

struct Stationary {
  double zhat;
  double xhat;
};

// Minimizer of delta(x, .) for x strictly inside (0, x1), bracketed as
//   (x, 1-1/q) below 1-1/q,  (x, 1) above it for odd d,  (1-1/q, x) for even d.
Stationary stationary_point(std::uint32_t q, std::uint32_t d, double x) {
  const double mid = (q - 1.0) / q;
  if (x == mid) return {0.0, mid};
  double xhat = 0.0;
  if (x < mid) {
    xhat = bisect_transition([&](double xh) { return x_of_xhat(q, d, xh) < x; }, x, mid, kFullPrecision);
    return {1.0 - q * xhat / (q - 1.0), xhat};
  }
  const double one_minus_x = 1.0 - x;
  const double lo = d % 2 == 1 ? x : mid;
  const double hi = d % 2 == 1 ? 1.0 : x;
  xhat = bisect_transition([&](double xh) { return one_minus_x_of_xhat(q, d, xh) > one_minus_x; }, lo, hi,
                           kFullPrecision);
  return {1.0 - q * xhat / (q - 1.0), xhat};
}

// Pieces of the derivative formulas that lose precision when formed from
// zhat directly: u = 1 - zhat, 1 + (q-1) zhat = q (1 - xhat),
// 1 - zhat^{d-1} = u sum_{i<d-1} zhat^i.
struct ZhatTerms {
  double zhat, u, one_plus, one_minus_pow;
};

ZhatTerms zhat_terms(std::uint32_t q, std::uint32_t d, const Stationary& s) {
  const double u = q * s.xhat / (q - 1.0);
  return {s.zhat, u, q * (1.0 - s.xhat), u * geometric_sum(s.zhat, d - 2)};
}

double omega_d2(std::uint32_t q, std::uint32_t c, double x) {
  const double h = entropy_q(x, q);
  return h == 0.0 ? 0.0 : (1.0 - c / 2.0) * h;
}

}  // namespace

double entropy_q(double x, std::uint32_t q) {
  require_unit(x, "entropy argument");
  double h = x * std::log(q - 1.0);
  if (x > 0.0) h -= x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log1p(-x);
  return h;
}

double divergence(double x, double y) {
  require_unit(x, "divergence argument");
  require_unit(y, "divergence reference");
  const auto term = [](double a, double b) {
    if (a == 0.0) return 0.0;
    if (b == 0.0) return kInf;
    return a * std::log(a / b);
  };
  return term(x, y) + term(1.0 - x, 1.0 - y);
}

double to_z(std::uint32_t q, double x) { return 1.0 - q * x / (q - 1.0); }
double to_x(std::uint32_t q, double z) { return (q - 1.0) * (1.0 - z) / q; }

double rho(std::uint32_t q, std::uint32_t d, double x) {
  if (odd_binary(q, d)) {
    // 1 + z^d = (1 + z) * alternating_sum(z), 1 + z = 2(1 - x).
    return std::log(2.0 * (1.0 - x)) + std::log(alternating_sum(1.0 - 2.0 * x, d));
  }
  return std::log1p((q - 1.0) * ipow(to_z(q, x), d));
}

double zeta(std::uint32_t q, std::uint32_t d, double zhat) {
  const double head = ipow(zhat, d - 1) * (1.0 - zhat);
  if (odd_binary(q, d)) return zhat + head / alternating_sum(zhat, d);
  return zhat + head * (1.0 + (q - 1.0) * zhat) / (1.0 + (q - 1.0) * ipow(zhat, d));
}

double zeta_prime(std::uint32_t q, std::uint32_t d, double zhat) {
  if (odd_binary(q, d)) {
    // With t = -zhat the numerator factors as (1-t)^3 P(t) and the
    // denominator as (1-t)^2 (sum_{i<d} t^i)^2.
    const double t = -zhat;
    double p = 0.0;
    for (std::uint32_t i = 0; i + 3 <= d; ++i) {
      p += (i + 1.0) * (i + 2.0) / 2.0 * (ipow(t, i) + ipow(t, 2 * d - 5 - i));
    }
    const double s = geometric_sum(t, d - 1);
    return (1.0 - t) * p / (s * s);
  }
  const double qm1 = q - 1.0;
  const double f = 1.0 + (d - 1.0) * ipow(zhat, d - 2) + (q - 2.0) * d * ipow(zhat, d - 1) -
                   qm1 * (d - 1.0) * ipow(zhat, d) - qm1 * ipow(zhat, 2 * d - 2);
  const double den = 1.0 + qm1 * ipow(zhat, d);
  return f / (den * den);
}

double zeta_range_start(std::uint32_t q, std::uint32_t d) {
  return odd_binary(q, d) ? 2.0 / d - 1.0 : -1.0 / (q - 1.0);
}

double domain_end(std::uint32_t q, std::uint32_t d) { return odd_binary(q, d) ? 1.0 - 1.0 / d : 1.0; }

double solve_zhat1(std::uint32_t q, std::uint32_t d, double z) {
  require_delta_params(q, d);
  const double z1 = zeta_range_start(q, d);
  if (!(z <= 1.0) || z < z1 - 1e-14) {
    throw DomainError("zeta(zhat) = " + std::to_string(z) + " has no solution in [-1/(q-1), 1]");
  }
  if (z == 1.0) return 1.0;
  if (z == 0.0) return 0.0;
  if (z <= z1 + 1e-14) return -1.0 / (q - 1.0);
  const double x = to_x(q, z);
  if (x <= 0.0) return 1.0;
  return stationary_point(q, d, x).zhat;
}

double delta_two_arg(std::uint32_t q, std::uint32_t d, double x, double xhat) {
  return d * divergence(x, xhat) + rho(q, d, xhat);
}

DeltaEval delta(std::uint32_t q, std::uint32_t d, double x) {
  require_delta_params(q, d);
  require_unit(x, "delta argument");
  DeltaEval out;
  out.x = x;
  out.z = to_z(q, x);
  const double x1 = domain_end(q, d);
  if (x < kNearEnd) {
    out.zhat1 = 1.0;
    out.xhat1 = 0.0;
    out.delta = std::log(static_cast<double>(q));
    return out;
  }
  if (x >= x1 - kNearEnd) {
    out.zhat1 = -1.0 / (q - 1.0);
    out.xhat1 = 1.0;
    if (!odd_binary(q, d)) {
      out.delta = rho(q, d, 1.0);
    } else if (x > x1 + kSnap) {
      out.delta = -kInf;
    } else {
      out.delta = std::log(2.0 * d) - d * entropy_q(1.0 / d, 2);
    }
    return out;
  }
  const Stationary s = stationary_point(q, d, x);
  out.zhat1 = s.zhat;
  out.xhat1 = s.xhat;
  out.delta = delta_two_arg(q, d, x, s.xhat);
  return out;
}

double omega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  require_prime_power(q);
  if (c < 1 || d < 2) throw ParameterError("omega requires c >= 1 and d >= 2");
  require_unit(x, "omega argument");
  if (d == 2) return omega_d2(q, c, x);
  const double dv = delta(q, d, x).delta;
  if (dv == -kInf) return -kInf;
  return entropy_q(x, q) + (static_cast<double>(c) / d) * (dv - std::log(static_cast<double>(q)));
}

GrowthPoint growth_point(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  GrowthPoint g;
  g.x = x;
  g.omega = omega(q, c, d, x);
  g.domega = g.omega == -kInf ? std::nan("") : domega(q, c, d, x);
  return g;
}

DerivativeForms domega_forms(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  require_delta_params(q, d);
  if (c < 1) throw ParameterError("c must be positive");
  const double x1 = domain_end(q, d);
  if (!(x > 0.0 && x < x1)) throw DomainError("derivative forms need x inside (0, x1)");
  const Stationary s = stationary_point(q, d, x);
  const ZhatTerms t = zhat_terms(q, d, s);
  DerivativeForms f;
  f.in_x = (c - 1.0) * std::log(x / (1.0 - x)) + c * std::log((1.0 - s.xhat) / s.xhat) + std::log(q - 1.0);
  f.in_zhat = std::log(t.one_plus / t.u) +
              (c - 1.0) * std::log(t.one_minus_pow / (1.0 + (q - 1.0) * ipow(t.zhat, d - 1)));
  return f;
}

double domega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  require_prime_power(q);
  if (c < 1 || d < 2) throw ParameterError("omega requires c >= 1 and d >= 2");
  require_unit(x, "omega argument");
  if (d == 2) {
    const double slope = 1.0 - c / 2.0;
    if (c == 2) return 0.0;
    if (x < kNearEnd) return slope > 0 ? kInf : -kInf;
    if (x > 1.0 - kNearEnd) return slope > 0 ? -kInf : kInf;
    return slope * (std::log((1.0 - x) / x) + std::log(q - 1.0));
  }
  const double x1 = domain_end(q, d);
  if (x < kNearEnd) {
    if (c == 1) return kInf;
    if (c == 2) return std::log(d - 1.0);
    return -kInf;
  }
  if (x > x1 + kSnap) throw DomainError("omega is -inf beyond x1; no derivative");
  if (x > x1 - kNearEnd) {
    if (q == 2 && d % 2 == 0) {
      if (c == 1) return -kInf;
      if (c == 2) return -std::log(d - 1.0);
      return kInf;
    }
    return -kInf;
  }
  return domega_forms(q, c, d, x).in_zhat;
}

double d2omega(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  require_prime_power(q);
  if (c < 1 || d < 2) throw ParameterError("omega requires c >= 1 and d >= 2");
  if (d == 2) return -(1.0 - c / 2.0) / (x * (1.0 - x));
  const double x1 = domain_end(q, d);
  if (!(x > 0.0 && x < x1)) throw DomainError("second derivative needs x inside (0, x1)");
  const Stationary s = stationary_point(q, d, x);
  const ZhatTerms t = zhat_terms(q, d, s);
  const double dslope =
      q * xi(q, c, d, t.zhat) / (t.one_minus_pow * t.one_plus * (1.0 + (q - 1.0) * ipow(t.zhat, d - 1)));
  const double dzhat_dx = -(q / (q - 1.0)) / zeta_prime(q, d, t.zhat);
  return dslope * dzhat_dx;
}

std::vector<long long> xi_coefficients(std::uint32_t q, std::uint32_t c, std::uint32_t d) {
  if (d < 3) throw ParameterError("xi requires d >= 3");
  const long long k = static_cast<long long>(c - 1) * (d - 1) - 1;
  const long long qm1 = q - 1;
  std::vector<long long> coef(2 * d - 2, 0);
  for (std::uint32_t i = 0; i + 3 <= d; ++i) coef[i] = 1;
  coef[d - 2] = -k;
  coef[d - 1] = -qm1 * k;
  for (std::uint32_t i = d; i <= 2 * d - 3; ++i) coef[i] = qm1;
  return coef;
}

double xi(std::uint32_t q, std::uint32_t c, std::uint32_t d, double zhat) {
  const auto coef = xi_coefficients(q, c, d);
  double v = 0.0;
  for (std::size_t i = coef.size(); i-- > 0;) v = v * zhat + static_cast<double>(coef[i]);
  return v;
}

Landmarks landmarks(std::uint32_t q, std::uint32_t c, std::uint32_t d) {
  require_prime_power(q);
  if (c < 1 || d < 3 || d < c) throw ParameterError("landmarks require d >= max(c, 3) and c >= 1");
  Landmarks lm;
  lm.q = q;
  lm.c = c;
  lm.d = d;
  lm.x1 = domain_end(q, d);
  lm.z1 = zeta_range_start(q, d);

  const auto xi_at = [&](double z) { return xi(q, c, d, z); };
  if (c >= 3) {
    lm.zhat2 = bisect_transition([&](double z) { return xi_at(z) > 0.0; }, 1e-12, 1.0 - 1e-12);
    if (q == 2 && d % 2 == 0) {
      lm.zhat2_neg = bisect_transition([&](double z) { return xi_at(z) < 0.0; }, -1.0 + 1e-12, -1e-12);
    }
  } else if (c == 2 && q >= 3) {
    // xi(1) = 0 with positive slope: the sign change sits just inside 1.
    const double hi = 1.0 - 1e-6;
    if (xi_at(hi) < 0.0) {
      lm.zhat2 = bisect_transition([&](double z) { return xi_at(z) > 0.0; }, 1e-12, hi);
    } else {
      lm.zhat2 = 1.0;
    }
  }
  if (lm.zhat2) lm.x2 = to_x(q, zeta(q, d, *lm.zhat2));

  if (c >= 3) {
    const double mid = (q - 1.0) / q;
    lm.x3 = bisect_transition([&](double x) { return domega(q, c, d, x) < 0.0; }, 0.0, mid);
    if (c == d) {
      lm.x0 = mid;
    } else {
      lm.x0 = bisect_transition([&](double x) { return omega(q, c, d, x) < 0.0; }, *lm.x3, mid);
    }
  }
  return lm;
}

double gv_threshold(std::uint32_t q, double r) {
  require_prime_power(q);
  if (!(r > 0.0 && r <= 1.0)) throw ParameterError("rate r must lie in (0, 1]");
  const double mid = (q - 1.0) / q;
  if (r == 1.0) return mid;
  const double target = r * std::log(static_cast<double>(q));
  return bisect_transition([&](double x) { return entropy_q(x, q) < target; }, 0.0, mid, kFullPrecision);
}

}  // namespace ldpc
