#pragma once

#include <stdexcept>
#include <string>

namespace coxaut {

// Braid-orbit search exceeded its visited-word budget.
class OrbitBudgetExceeded : public std::runtime_error {
 public:
  explicit OrbitBudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A labeling could not be rewritten into the restricted per-edge form
// (carrying reached a basepoint whose other branches cannot absorb the
// leftover letter). The conjugator-family form of the same automorphism
// remains usable.
class CanonicalizeError : public std::runtime_error {
 public:
  explicit CanonicalizeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Precondition violation: unvalidated diagram, malformed input file,
// label outside its edge's space, and the like.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace coxaut
