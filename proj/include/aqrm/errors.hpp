#pragma once

#include <stdexcept>
#include <string>

namespace aqrm {

// Requested symbolic division has a nonzero remainder.
struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A redundant equation of the coefficient recursion failed to close, or a
// derived table violates a relation it must satisfy by construction.  Carries
// the level (i + j) and row index i of the offending instance.
struct Inconsistent : std::runtime_error {
  int level;
  int index;
  Inconsistent(const std::string& what, int level_, int index_)
      : std::runtime_error(what), level(level_), index(index_) {}
};

// A numeric evaluation was requested at a point outside the coefficient's
// domain (e.g. a pole of a negative g power).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A least-squares system is too poorly conditioned to trust; usually the
// truncation dimension is too small or the sampled spectrum too clustered.
struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aqrm
