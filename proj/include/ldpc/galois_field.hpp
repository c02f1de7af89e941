#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace ldpc {

/// An element of GF(q), stored as its canonical integer in [0, q).
/// The integer is the coefficient vector of the polynomial representative
/// written in base p, constant term as the least significant digit.
struct FieldElement {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic in GF(q) for a prime power q = p^k.
///
/// Extension fields use the lexicographically smallest monic irreducible
/// polynomial of degree k (coefficients compared constant term first).
/// For q <= 256 all operations are table lookups; larger fields fall back
/// to polynomial arithmetic.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kMaxTabulated = 256;

  /// Throws ParameterError if q is not a prime power in [2, 2^16].
  explicit GaloisField(std::uint32_t q);

  std::uint32_t order() const { return q_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  /// Monic modulus, coefficients low degree first (size k + 1).
  /// For prime fields this is the placeholder {0, 1}.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  /// Throws DomainError for a = 0.
  FieldElement inv(FieldElement a) const;

  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(FieldElement a) const;

  // Raw table access for hot loops (valid only when tabulated()).
  bool tabulated() const { return !mul_table_.empty(); }
  const std::uint8_t* add_row(std::uint32_t a) const { return &add_table_[a * q_]; }
  const std::uint8_t* mul_row(std::uint32_t a) const { return &mul_table_[a * q_]; }

 private:
  FieldElement add_poly(FieldElement a, FieldElement b) const;
  FieldElement mul_poly(FieldElement a, FieldElement b) const;
  void check(FieldElement a) const;

  std::uint32_t q_;
  std::uint32_t p_;
  std::uint32_t k_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint8_t> add_table_;
  std::vector<std::uint8_t> mul_table_;
  std::vector<std::uint8_t> neg_table_;
  std::vector<std::uint8_t> inv_table_;
};

/// Decomposes q = p^k; returns false if q is not a prime power.
bool prime_power_decompose(std::uint32_t q, std::uint32_t& p, std::uint32_t& k);

/// Irreducibility over GF(p) by trial division against every monic
/// polynomial of degree 1..deg/2. Coefficients low degree first; the
/// polynomial must be monic.
bool is_irreducible(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Lexicographically smallest monic irreducible polynomial of degree k over
/// GF(p), coefficients compared constant term first.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k);

}  // namespace ldpc
