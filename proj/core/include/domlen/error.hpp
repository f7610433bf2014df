#pragma once

#include <stdexcept>
#include <string>

namespace domlen {

/// Raised by the numerical kernels when a computation cannot continue.
class SolverError : public std::runtime_error {
 public:
  enum class Kind {
    ZeroPivot,         // tridiagonal elimination hit a vanishing pivot
    CourantViolation,  // time step too large for the advection speed
    BlowUp,            // non-finite state
    MaximumPrinciple,  // transported density left its admissible range
  };

  SolverError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace domlen
