#include <doctest.h>

#include <cmath>
#include <numbers>
#include <tuple>
#include <vector>

#include "ldpc/errors.hpp"
#include "ldpc/growth_rate.hpp"

using namespace ldpc;

namespace {

const double kLn2 = std::numbers::ln2;

double h2(double x) { return entropy_q(x, 2); }

// Infimum of delta(x, .) over a uniform grid of (0, 1), refined around the
// best cell by a second grid.
double grid_infimum(std::uint32_t q, std::uint32_t d, double x, int points = 10000) {
  double best = kInf;
  double arg = 0.5;
  for (int i = 1; i < points; ++i) {
    const double xh = static_cast<double>(i) / points;
    const double v = delta_two_arg(q, d, x, xh);
    if (v < best) {
      best = v;
      arg = xh;
    }
  }
  const double lo = std::max(arg - 1.0 / points, 1e-15);
  const double hi = std::min(arg + 1.0 / points, 1.0 - 1e-15);
  for (int i = 0; i <= points; ++i) best = std::min(best, delta_two_arg(q, d, x, lo + (hi - lo) * i / points));
  return best;
}

// Same oracle for d = 2, where the closed form omega = (1 - c/2) H_q is used.
double omega_by_definition(std::uint32_t q, std::uint32_t c, std::uint32_t d, double x) {
  return entropy_q(x, q) + (static_cast<double>(c) / d) * (grid_infimum(q, d, x) - std::log(static_cast<double>(q)));
}

std::vector<double> interior_grid(double lo, double hi, int points) {
  std::vector<double> xs;
  for (int i = 1; i <= points; ++i) xs.push_back(lo + (hi - lo) * i / (points + 1));
  return xs;
}

using Poly = std::vector<long long>;

Poly multiply(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

const std::vector<std::tuple<std::uint32_t, std::uint32_t>> kFigurePairs{{2, 5}, {2, 6}, {3, 5}, {3, 6}};

}  // namespace

TEST_CASE("entropy and divergence") {
  CHECK(h2(0.5) == doctest::Approx(kLn2).epsilon(1e-15));
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    CHECK(entropy_q(1.0 - 1.0 / q, q) == doctest::Approx(std::log(q)).epsilon(1e-14));
    CHECK(entropy_q(0.0, q) == 0.0);
  }
  CHECK(divergence(0.3, 0.3) == 0.0);
  CHECK(divergence(0.3, 0.0) == kInf);
  CHECK(divergence(0.0, 0.0) == 0.0);
  CHECK(divergence(0.2, 0.5) == doctest::Approx(0.2 * std::log(0.4) + 0.8 * std::log(1.6)));
}

TEST_CASE("rho special values") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t d = 2; d <= 7; ++d) {
      CHECK(rho(q, d, 0.0) == doctest::Approx(std::log(q)).epsilon(1e-15));
      CHECK(std::abs(rho(q, d, 1.0 - 1.0 / q)) < 1e-15);
    }
  }
  CHECK(rho(3, 6, 1.0) == doctest::Approx(std::log(33.0 / 32.0)).epsilon(1e-14));
  CHECK(rho(2, 5, 1.0) == -kInf);
}

TEST_CASE("zeta special values and range") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t d = 3; d <= 8; ++d) {
      CHECK(zeta(q, d, 0.0) == 0.0);
      CHECK(zeta(q, d, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  CHECK(zeta(2, 5, -1.0) == doctest::Approx(-0.6).epsilon(1e-14));
  CHECK(zeta_range_start(2, 5) == doctest::Approx(-0.6).epsilon(1e-15));
  CHECK(zeta_range_start(3, 6) == -0.5);
  CHECK(domain_end(2, 5) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(domain_end(2, 6) == 1.0);
}

TEST_CASE("zeta is strictly increasing and satisfies the fixed-point identity") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t d = 3; d <= 8; ++d) {
      CAPTURE(q);
      CAPTURE(d);
      const double lo = -1.0 / (q - 1.0);
      const int points = 10000;
      double prev = -kInf;
      bool increasing = true;
      double worst = 0.0;
      for (int i = 0; i <= points; ++i) {
        const double z = lo + (1.0 - lo) * i / points;
        const double v = zeta(q, d, z);
        increasing = increasing && v > prev;
        prev = v;
        const double den = 1.0 + (q - 1.0) * std::pow(z, d);
        if (std::abs(den) < 1e-6) continue;
        const double rhs = std::pow(z, d - 1) * (1.0 - z) * (1.0 + (q - 1.0) * z) / den;
        worst = std::max(worst, std::abs(v - z - rhs));
      }
      CHECK(increasing);
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("zeta derivative matches finite differences") {
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t d : {3u, 5u, 6u}) {
      const double lo = -1.0 / (q - 1.0);
      for (double z : interior_grid(lo + 0.01, 0.99, 40)) {
        const double h = 1e-6;
        const double fd = (zeta(q, d, z + h) - zeta(q, d, z - h)) / (2 * h);
        CHECK(zeta_prime(q, d, z) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("stationary point solve") {
  CHECK(solve_zhat1(2, 6, 0.0) == 0.0);
  CHECK(solve_zhat1(3, 5, 1.0) == 1.0);
  CHECK(solve_zhat1(2, 5, -0.6) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_THROWS_AS(solve_zhat1(2, 5, -0.7), DomainError);
  CHECK_THROWS_AS(solve_zhat1(3, 6, -0.6), DomainError);
  for (auto [q, d] : kFigurePairs) {
    const double z1 = zeta_range_start(q, d);
    double prev = -kInf;
    for (double z : interior_grid(z1, 1.0, 200)) {
      const double zh = solve_zhat1(q, d, z);
      CHECK(std::abs(zeta(q, d, zh) - z) < 1e-12);
      CHECK(zh >= -1.0 / (q - 1.0));
      CHECK(zh <= 1.0);
      CHECK(zh > prev);
      prev = zh;
    }
  }
}

TEST_CASE("delta with two arguments") {
  for (double x : {0.1, 0.37, 0.8}) CHECK(delta_two_arg(3, 5, x, x) == doctest::Approx(rho(3, 5, x)).epsilon(1e-14));
  CHECK(std::abs(delta_two_arg(2, 4, 0.5, 0.5)) < 1e-15);
  CHECK(delta_two_arg(2, 6, 0.2, 0.3) ==
        doctest::Approx(6 * divergence(0.2, 0.3) + rho(2, 6, 0.3)).epsilon(1e-14));
}

TEST_CASE("delta endpoint values") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t d = 3; d <= 8; ++d) {
      CHECK(delta(q, d, 0.0).delta == doctest::Approx(std::log(q)).epsilon(1e-15));
      CHECK(std::abs(delta(q, d, 1.0 - 1.0 / q).delta) < 1e-12);
      if (!(q == 2 && d % 2 == 1)) CHECK(delta(q, d, 1.0).delta == doctest::Approx(rho(q, d, 1.0)).epsilon(1e-12));
    }
  }
  for (std::uint32_t d : {3u, 5u, 7u}) {
    const double x1 = 1.0 - 1.0 / d;
    CHECK(delta(2, d, x1).delta == doctest::Approx(std::log(2.0 * d) - d * h2(1.0 / d)).epsilon(1e-12));
    CHECK(delta(2, d, x1 + 1e-6).delta == -kInf);
    CHECK(delta(2, d, 1.0).delta == -kInf);
  }
  CHECK(delta(2, 5, 0.8).delta == doctest::Approx(std::log(10.0) - 5 * h2(0.2)).epsilon(1e-12));
  CHECK_THROWS_AS(delta(2, 2, 0.3), ParameterError);
  CHECK_THROWS_AS(delta(2, 6, 1.5), DomainError);
}

TEST_CASE("delta is the infimum over xhat") {
  for (auto [q, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t>>{{2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 3}}) {
    const double x1 = domain_end(q, d);
    for (double x : interior_grid(0.0, x1, 12)) {
      CAPTURE(q);
      CAPTURE(d);
      CAPTURE(x);
      const DeltaEval e = delta(q, d, x);
      const double inf = grid_infimum(q, d, x, 4000);
      CHECK(e.delta <= inf + 1e-12);
      CHECK(e.delta >= inf - 1e-7);
      CHECK(std::abs(zeta(q, d, e.zhat1) - e.z) < 1e-10);
    }
  }
  // Dense check at one point.
  const double v = delta(2, 6, 0.3).delta;
  for (int i = 1; i < 10000; ++i) CHECK(v <= delta_two_arg(2, 6, 0.3, i / 10000.0) + 1e-13);
}

TEST_CASE("stationary point stays in its bracket") {
  for (auto [q, d] : kFigurePairs) {
    const double mid = 1.0 - 1.0 / q;
    for (double x : interior_grid(0.0, domain_end(q, d), 50)) {
      const double xh = delta(q, d, x).xhat1;
      if (x < mid) {
        CHECK(xh >= x);
        CHECK(xh <= mid);
      } else if (d % 2 == 1) {
        CHECK(xh >= x);
        CHECK(xh <= 1.0);
      } else {
        CHECK(xh >= mid);
        CHECK(xh <= x);
      }
    }
  }
}

TEST_CASE("omega special values") {
  for (auto [q, d] : kFigurePairs) {
    for (std::uint32_t c = 1; c <= 3; ++c) {
      CAPTURE(q);
      CAPTURE(d);
      CAPTURE(c);
      CHECK(std::abs(omega(q, c, d, 0.0)) < 1e-15);
      CHECK(omega(q, c, d, 1.0 - 1.0 / q) ==
            doctest::Approx((1.0 - static_cast<double>(c) / d) * std::log(q)).epsilon(1e-12));
      if (q == 2 && d % 2 == 1) {
        const double x1 = 1.0 - 1.0 / d;
        CHECK(omega(q, c, d, x1) ==
              doctest::Approx((1.0 - c) * h2(1.0 / d) + (static_cast<double>(c) / d) * std::log(d)).epsilon(1e-12));
        CHECK(omega(q, c, d, 0.9) == -kInf);
      } else {
        const double expect = std::log(q - 1.0) + (static_cast<double>(c) / d) * (rho(q, d, 1.0) - std::log(q));
        CHECK(omega(q, c, d, 1.0) == doctest::Approx(expect).epsilon(1e-12));
      }
    }
  }
  CHECK(omega(2, 3, 6, 0.5) == doctest::Approx(0.5 * kLn2).epsilon(1e-13));
  CHECK(omega(2, 3, 5, 0.8) == doctest::Approx(-2 * h2(0.2) + 0.6 * std::log(5.0)).epsilon(1e-12));
}

TEST_CASE("omega matches its definition") {
  for (auto [q, c, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 3, 6}, {3, 2, 5}, {4, 3, 4}, {2, 1, 3}}) {
    for (double x : interior_grid(0.0, domain_end(q, d), 7)) {
      CHECK(omega(q, c, d, x) == doctest::Approx(omega_by_definition(q, c, d, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("d = 2 closed form matches the infimum definition") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t c = 1; c <= 4; ++c) {
      for (double x : {0.01, 0.1, 0.3, 0.5, 0.77, 0.95}) {
        CAPTURE(q);
        CAPTURE(c);
        CAPTURE(x);
        CHECK(omega(q, c, 2, x) == doctest::Approx(omega_by_definition(q, c, 2, x)).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("binary even-d symmetry") {
  for (auto [c, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t>>{{3, 6}, {2, 4}, {4, 8}, {1, 6}}) {
    for (int i = 0; i <= 1000; ++i) {
      const double x = i / 1000.0;
      CHECK(std::abs(omega(2, c, d, x) - omega(2, c, d, 1.0 - x)) < 1e-10);
    }
  }
}

TEST_CASE("first derivative") {
  for (auto [q, c, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 3, 6}, {2, 4, 8}, {3, 3, 6}, {2, 3, 5}, {3, 2, 5}, {2, 1, 6}, {4, 2, 3}}) {
    const double x1 = domain_end(q, d);
    for (double x : interior_grid(0.0, x1, 100)) {
      if (x < 2e-3 || x > x1 - 2e-3) continue;
      CAPTURE(q);
      CAPTURE(c);
      CAPTURE(d);
      CAPTURE(x);
      const double h = 1e-5;
      const double fd = (omega(q, c, d, x + h) - omega(q, c, d, x - h)) / (2 * h);
      CHECK(std::abs(domega(q, c, d, x) - fd) < 1e-6);
      const DerivativeForms f = domega_forms(q, c, d, x);
      CHECK(std::abs(f.in_x - f.in_zhat) < 1e-10);
    }
  }
  const double h = 1e-5;
  CHECK(std::abs(domega(2, 3, 6, 0.2) - (omega(2, 3, 6, 0.2 + h) - omega(2, 3, 6, 0.2 - h)) / (2 * h)) < 1e-6);
}

TEST_CASE("first derivative limits") {
  for (auto [q, d] : kFigurePairs) {
    for (std::uint32_t c = 1; c <= 3; ++c) CHECK(std::abs(domega(q, c, d, 1.0 - 1.0 / q)) < 1e-12);
    CHECK(domega(q, 2, d, 0.0) == doctest::Approx(std::log(d - 1.0)).epsilon(1e-14));
    CHECK(domega(q, 1, d, 0.0) == kInf);
    CHECK(domega(q, 3, d, 0.0) == -kInf);
  }
  CHECK(domega(2, 3, 6, 1.0) == kInf);
  CHECK(domega(2, 1, 6, 1.0) == -kInf);
  CHECK(domega(2, 2, 6, 1.0) == doctest::Approx(-std::log(5.0)).epsilon(1e-14));
  // Finite-difference trend towards the limits.
  CHECK(domega(2, 2, 6, 1e-6) == doctest::Approx(std::log(5.0)).epsilon(1e-3));
  CHECK(domega(2, 3, 6, 1.0 - 1e-6) > domega(2, 3, 6, 1.0 - 1e-4));
  CHECK(domega(2, 3, 6, 1.0 - 1e-4) > 0.0);
  CHECK_THROWS_AS(domega(2, 3, 5, 0.9), DomainError);
}

TEST_CASE("xi coefficients and special values") {
  CHECK(xi_coefficients(2, 3, 6) == std::vector<long long>{1, 1, 1, 1, -9, -9, 1, 1, 1, 1});
  for (std::uint32_t q : {2u, 3u, 4u}) {
    for (std::uint32_t c = 1; c <= 5; ++c) {
      for (std::uint32_t d = 3; d <= 8; ++d) {
        CHECK(xi(q, c, d, 0.0) == 1.0);
        CHECK(xi(q, c, d, 1.0) == doctest::Approx(-static_cast<double>(q) * (c - 2.0) * (d - 1.0)));
      }
    }
  }
  for (std::uint32_t d = 3; d <= 8; ++d) {
    for (double z : interior_grid(-1.0, 1.0, 999)) CHECK(xi(2, 2, d, z) > 0.0);
  }
}

TEST_CASE("second derivative sign follows xi") {
  for (auto [q, c, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 3, 6}, {3, 3, 6}, {2, 3, 5}, {2, 4, 8}, {3, 2, 4}}) {
    const double x1 = domain_end(q, d);
    for (double x : interior_grid(0.0, x1, 60)) {
      if (x < 1e-2 || x > x1 - 1e-2) continue;
      CAPTURE(q);
      CAPTURE(c);
      CAPTURE(d);
      CAPTURE(x);
      const double zh = delta(q, d, x).zhat1;
      const double s = xi(q, c, d, zh);
      if (std::abs(s) < 1e-3) continue;
      const double h = 1e-4;
      const double fd2 = (omega(q, c, d, x + h) - 2 * omega(q, c, d, x) + omega(q, c, d, x - h)) / (h * h);
      const double d2 = d2omega(q, c, d, x);
      CHECK((d2 > 0) == (s < 0));
      CHECK((fd2 > 0) == (d2 > 0));
      CHECK(d2 == doctest::Approx(fd2).epsilon(1e-3));
    }
  }
}

TEST_CASE("factorization identity for odd d") {
  for (long long d : {3, 5, 7, 9}) {
    Poly lhs(2 * d - 1, 0);
    lhs[0] = 1;
    lhs[d - 2] -= d - 1;
    lhs[d] += d - 1;
    lhs[2 * d - 2] -= 1;
    Poly sum(2 * d - 4, 0);
    for (long long i = 0; i <= d - 3; ++i) {
      const long long w = (i + 1) * (i + 2) / 2;
      sum[i] += w;
      sum[2 * d - 5 - i] += w;
    }
    const Poly cube = multiply(multiply(Poly{1, -1}, Poly{1, -1}), Poly{1, -1});
    CHECK(multiply(cube, sum) == lhs);
  }
}

TEST_CASE("landmarks in the main regime") {
  for (auto [q, c, d] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
           {2, 3, 6}, {2, 4, 8}, {3, 3, 6}, {2, 3, 5}, {4, 3, 7}}) {
    CAPTURE(q);
    CAPTURE(c);
    CAPTURE(d);
    const Landmarks lm = landmarks(q, c, d);
    const double mid = 1.0 - 1.0 / q;
    REQUIRE(lm.x0);
    REQUIRE(lm.x2);
    REQUIRE(lm.x3);
    REQUIRE(lm.zhat2);
    CHECK(std::abs(omega(q, c, d, *lm.x0)) < 1e-10);
    CHECK(std::abs(domega(q, c, d, *lm.x3)) < 1e-10);
    CHECK(std::abs(xi(q, c, d, *lm.zhat2)) < 1e-10);
    CHECK(0.0 < *lm.x3);
    CHECK(*lm.x3 < *lm.x2);
    CHECK(*lm.x2 < mid);
    CHECK(*lm.x3 < *lm.x0);
    CHECK(*lm.x0 <= mid);
    CHECK(std::abs(delta(q, d, *lm.x2).zhat1 - *lm.zhat2) < 1e-8);
    for (int i = 1; i < 1000; ++i) {
      const double x = mid * i / 1000.0;
      if (std::abs(x - *lm.x0) < 1e-9) continue;
      const double w = omega(q, c, d, x);
      if (x < *lm.x0) CHECK(w < 0.0);
      if (x > *lm.x0) CHECK(w > 0.0);
    }
  }
}

TEST_CASE("x0 agrees with a coarse-to-fine grid scan") {
  // Each pass finds the first sign change on a 100-point grid of the
  // current bracket.
  double lo = 1e-6;
  double hi = 0.5;
  for (int pass = 0; pass < 8; ++pass) {
    double prev = lo;
    for (int i = 1; i <= 100; ++i) {
      const double x = lo + (hi - lo) * i / 100;
      if (omega(2, 3, 6, x) >= 0.0) {
        lo = prev;
        hi = x;
        break;
      }
      prev = x;
    }
  }
  CHECK(std::abs(*landmarks(2, 3, 6).x0 - 0.5 * (lo + hi)) < 1e-8);
}

TEST_CASE("landmark edge regimes") {
  const Landmarks eq = landmarks(2, 3, 3);
  CHECK(*eq.x0 == 0.5);
  CHECK(std::abs(omega(2, 3, 3, 0.5)) < 1e-12);
  const Landmarks two = landmarks(3, 2, 5);
  CHECK_FALSE(two.x0);
  CHECK_FALSE(two.x3);
  CHECK(two.zhat2);
  const Landmarks one = landmarks(2, 1, 4);
  CHECK_FALSE(one.zhat2);
  CHECK_FALSE(one.x2);
  const Landmarks neg = landmarks(2, 3, 6);
  REQUIRE(neg.zhat2_neg);
  CHECK(std::abs(xi(2, 3, 6, *neg.zhat2_neg)) < 1e-10);
  CHECK(*neg.zhat2_neg < 0.0);
  CHECK_FALSE(landmarks(3, 3, 6).zhat2_neg);
  CHECK_THROWS_AS(landmarks(2, 4, 3), ParameterError);
  CHECK_THROWS_AS(landmarks(2, 2, 2), ParameterError);
}

TEST_CASE("GV threshold") {
  CHECK(gv_threshold(2, 1.0) == 0.5);
  CHECK(gv_threshold(3, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double x = gv_threshold(2, 0.5);
  CHECK(std::abs(h2(x) - 0.5 * kLn2) < 1e-12);
  CHECK(x > 0.0);
  CHECK(x < 0.5);
  CHECK(gv_threshold(2, 0.3) < gv_threshold(2, 0.5));
  CHECK_THROWS_AS(gv_threshold(2, 0.0), ParameterError);
  CHECK_THROWS_AS(gv_threshold(2, 1.5), ParameterError);
}

TEST_CASE("x0 approaches the GV threshold") {
  const double gv = gv_threshold(2, 0.5);
  double prev = kInf;
  for (std::uint32_t d : {6u, 12u, 24u, 48u}) {
    const double gap = std::abs(*landmarks(2, d / 2, d).x0 - gv);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 0.01);
}
