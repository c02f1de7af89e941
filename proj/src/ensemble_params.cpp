#include "ldpc/ensemble_params.hpp"

#include "ldpc/errors.hpp"
#include "ldpc/galois_field.hpp"

namespace ldpc {

void require_prime_power(std::uint32_t q) {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  if (q > GaloisField::kMaxOrder || !prime_power_decompose(q, p, k)) {
    throw ParameterError("q = " + std::to_string(q) + " is not a prime power");
  }
}

void EnsembleParams::validate() const {
  require_prime_power(q);
  if (c < 1 || d < 1 || n < 1) throw ParameterError("c, d and n must be positive: " + to_string());
  if ((std::uint64_t{c} * n) % d != 0) throw ParameterError("d must divide c*n: " + to_string());
  if (std::uint64_t{c} * n > 0x7fffffffu) throw ParameterError("c*n too large: " + to_string());
}

std::string EnsembleParams::to_string() const {
  return "(q=" + std::to_string(q) + ", c=" + std::to_string(c) + ", d=" + std::to_string(d) +
         ", n=" + std::to_string(n) + ")";
}

EnsembleParams make_params(std::uint32_t q, std::uint32_t c, std::uint32_t d, std::uint32_t n) {
  EnsembleParams p{q, c, d, n};
  p.validate();
  return p;
}

}  // namespace ldpc
