#pragma once

#include <stdexcept>
#include <string>

namespace bk2 {

// Argument outside the region where a formula or representation is valid.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Guard-precision comparison kept disagreeing after the allowed escalations.
class PrecisionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureNonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact sign bracket did not change sign. Sign alternation at the integers
// makes this impossible for a correct implementation.
class BracketFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularLeadingCoefficient : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bk2
