#pragma once

#include <stdexcept>
#include <string>

namespace uvball {

// Invalid parameters: a precondition of the called operation does not hold.
class parameter_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// The evaluation point is outside the region where the quantity is defined.
class domain_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Explicit bases exist only for d = 2 and d = 3.
class unsupported_dimension : public parameter_error {
public:
  explicit unsupported_dimension(int d)
      : parameter_error("dimension " + std::to_string(d) +
                        " has no explicit harmonic basis (d must be 2 or 3)") {}
};

// An internal numerical routine failed (eigen-solver, consistency cross-check).
class numeric_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& what) {
  if (!condition) throw parameter_error(what);
}

}  // namespace detail
}  // namespace uvball
