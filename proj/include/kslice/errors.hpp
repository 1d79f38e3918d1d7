#pragma once

#include <stdexcept>
#include <string>

namespace kslice {

/// A request that violates a documented precondition.  The CLI maps this to
/// exit code 1.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request the library declines to compute: infinite cover
/// homology, a non-cyclic submodule lattice, an unresolved factorisation, a
/// brute-force bound.  Exit code 2.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact operation with no answer for the given arguments, e.g. inverting
/// a singular matrix or asking for a metaboliser that does not exist.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace kslice
