#include "ldpc/galois_field.hpp"

#include <string>

#include "ldpc/errors.hpp"

namespace ldpc {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(std::uint32_t v, std::uint32_t p, std::uint32_t k) {
  Poly out(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

}  // namespace

bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& k) {
  if (q < 2) return false;
  std::uint32_t f = 2;
  while (f * f <= q && q % f != 0) ++f;
  if (q % f != 0) f = q;  // q itself is prime
  std::uint32_t rest = q;
  std::uint32_t e = 0;
  while (rest % f == 0) {
    rest /= f;
    ++e;
  }
  if (rest != 1 || !is_prime(f)) return false;
  p = f;
  k = e;
  return true;
}

bool is_irreducible(const Poly& poly, std::uint32_t p) {
  Poly a = poly;
  trim(a);
  if (a.size() < 2) return false;
  const std::uint32_t deg = static_cast<std::uint32_t>(a.size() - 1);
  if (deg == 1) return true;
  // Monic divisors of degree m are enumerated as p^m coefficient vectors.
  for (std::uint32_t m = 1; m <= deg / 2; ++m) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint32_t v = 0; v < count; ++v) {
      Poly divisor = digits(v, p, m);
      divisor.push_back(1);
      if (poly_mod(a, divisor, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  if (k == 1) return {0, 1};
  std::uint32_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  // Lexicographic order with the constant term most significant: the
  // constant term is the leading digit of the enumeration counter.
  for (std::uint32_t v = 0; v < count; ++v) {
    Poly candidate(k + 1, 0);
    std::uint32_t rest = v;
    for (std::uint32_t i = k; i-- > 0;) {
      candidate[i] = rest % p;
      rest /= p;
    }
    candidate[k] = 1;
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw ParameterError("no irreducible polynomial of degree " + std::to_string(k));
}

GaloisField::GaloisField(std::uint32_t q) : q_(q), p_(0), k_(0) {
  if (q > kMaxOrder || !prime_power_decompose(q, p_, k_)) {
    throw ParameterError("q = " + std::to_string(q) + " is not a prime power in [2, 65536]");
  }
  modulus_ = smallest_irreducible(p_, k_);
  if (q_ > kMaxTabulated) return;

  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  neg_table_.resize(q_);
  inv_table_.resize(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_table_[a * q_ + b] = static_cast<std::uint8_t>(add_poly({a}, {b}).value);
      mul_table_[a * q_ + b] = static_cast<std::uint8_t>(mul_poly({a}, {b}).value);
    }
  }
  for (std::uint32_t a = 0; a < q_; ++a) {
    for (std::uint32_t b = 0; b < q_; ++b) {
      if (add_table_[a * q_ + b] == 0) neg_table_[a] = static_cast<std::uint8_t>(b);
      if (mul_table_[a * q_ + b] == 1) inv_table_[a] = static_cast<std::uint8_t>(b);
    }
  }
}

void GaloisField::check(FieldElement a) const {
  if (a.value >= q_) {
    throw DomainError("element " + std::to_string(a.value) + " outside GF(" + std::to_string(q_) + ")");
  }
}

FieldElement GaloisField::add_poly(FieldElement a, FieldElement b) const {
  if (k_ == 1) return {(a.value + b.value) % p_};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((a.value % p_ + b.value % p_) % p_) * scale;
    a.value /= p_;
    b.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement GaloisField::mul_poly(FieldElement a, FieldElement b) const {
  if (k_ == 1) {
    return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }
  const Poly x = digits(a.value, p_, k_);
  const Poly y = digits(b.value, p_, k_);
  Poly prod(2 * k_ - 1, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  return {encode(poly_mod(prod, modulus_, p_), p_)};
}

FieldElement GaloisField::add(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (tabulated()) return {add_table_[a.value * q_ + b.value]};
  return add_poly(a, b);
}

FieldElement GaloisField::neg(FieldElement a) const {
  check(a);
  if (tabulated()) return {neg_table_[a.value]};
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((p_ - a.value % p_) % p_) * scale;
    a.value /= p_;
    scale *= p_;
  }
  return {out};
}

FieldElement GaloisField::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement GaloisField::mul(FieldElement a, FieldElement b) const {
  check(a);
  check(b);
  if (tabulated()) return {mul_table_[a.value * q_ + b.value]};
  return mul_poly(a, b);
}

FieldElement GaloisField::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw DomainError("inverse of zero in GF(" + std::to_string(q_) + ")");
  if (tabulated()) return {inv_table_[a.value]};
  // a^(q-2) by square and multiply.
  FieldElement result = one();
  FieldElement base = a;
  for (std::uint32_t e = q_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = mul_poly(result, base);
    base = mul_poly(base, base);
  }
  return result;
}

std::uint32_t GaloisField::multiplicative_order(FieldElement a) const {
  check(a);
  if (a.value == 0) throw DomainError("zero has no multiplicative order");
  FieldElement x = a;
  std::uint32_t ord = 1;
  while (x != one()) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

}  // namespace ldpc
