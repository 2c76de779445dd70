#pragma once

#include <stdexcept>
#include <string>

namespace lagfrac {

// Precondition / parameter-domain violations (bad alpha, strip or support
// mismatch, divergent integral detected from metadata).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A gamma-type pole was hit where a finite value was requested.
class pole_error : public domain_error {
 public:
  explicit pole_error(const std::string& what) : domain_error(what) {}
};

// An iterative scheme (series, quadrature refinement, contour extension)
// exhausted its budget before reaching the requested tolerance.
class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace lagfrac
