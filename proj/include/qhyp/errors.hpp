#pragma once

#include <stdexcept>
#include <string>

namespace qhyp {

// Input outside the admissible domain (negative separation, gamma > 1, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// 1 + delta*c vanishes; the two-source state cannot be normalized.
class DegenerateScenarioError : public std::domain_error {
 public:
  explicit DegenerateScenarioError(const std::string& what) : std::domain_error(what) {}
};

// A spatial grid too short or too coarse for the quadrature oracle.
class AccuracyError : public std::runtime_error {
 public:
  explicit AccuracyError(const std::string& what) : std::runtime_error(what) {}
};

// A detector event that cannot occur for a single registered photon.
class InvalidEventError : public std::invalid_argument {
 public:
  explicit InvalidEventError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qhyp
