#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A floor [n^c] could not be resolved at the largest configured precision.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sampled hypothesis of an exponential-sum estimate does not hold.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two quadrature resolutions disagree by more than the accepted tolerance.
class GridTooCoarse : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter constraints of the prime-identity decomposition fail.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal exactness self-test failed.
class SelfTestFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pslab
