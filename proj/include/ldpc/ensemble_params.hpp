#pragma once

#include <cstdint>
#include <string>

namespace ldpc {

/// Parameters of the (c, d)-regular ensemble over GF(q) with block length n.
struct EnsembleParams {
  std::uint32_t q = 2;
  std::uint32_t c = 1;  // variable-node degree
  std::uint32_t d = 1;  // check-node degree
  std::uint32_t n = 1;  // block length

  /// Number of check nodes, cn / d.
  std::uint32_t checks() const { return c * n / d; }
  /// Number of edges (sockets on either side), cn.
  std::uint32_t sockets() const { return c * n; }

  /// Throws ParameterError unless q is a prime power, c, d, n >= 1 and
  /// d divides cn.
  void validate() const;

  std::string to_string() const;

  friend bool operator==(const EnsembleParams&, const EnsembleParams&) = default;
};

/// Validated construction.
EnsembleParams make_params(std::uint32_t q, std::uint32_t c, std::uint32_t d, std::uint32_t n);

/// Throws ParameterError if q is not a prime power in [2, 2^16].
void require_prime_power(std::uint32_t q);

}  // namespace ldpc
