#pragma once

#include <stdexcept>
#include <string>

namespace bergkern {

/// Argument lies outside the region where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation too close to a kernel singularity.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed quantity violated a mathematical invariant (e.g. K(z,z) <= 0).
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by Gram-Schmidt when an input function is numerically dependent.
class DependentInputError : public std::runtime_error {
 public:
  DependentInputError(std::size_t index)
      : std::runtime_error("numerically dependent input at index " + std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace bergkern
