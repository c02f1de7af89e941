#pragma once

#include <stdexcept>
#include <string>

namespace ldpc {

/// Invalid parameters or preconditions (CLI exit code 2).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Arguments outside a function's mathematical domain (CLI exit code 2).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A configured size cap would be exceeded (CLI exit code 3).
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ldpc
