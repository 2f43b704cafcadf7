#ifndef REGSEM_ERROR_HPP_
#define REGSEM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "regsem/types.hpp"

namespace regsem {

/// Base class of every exception thrown by this library.
struct RegsemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A Cayley table failed the exhaustive associativity check.
/// Carries the witness triple (a, b, c) with (ab)c != a(bc).
struct NonAssociativeError : RegsemError {
  NonAssociativeError(Idx a, Idx b, Idx c)
      : RegsemError("table is not associative at triple (" + std::to_string(a)
                    + ", " + std::to_string(b) + ", " + std::to_string(c)
                    + ")"),
        a(a),
        b(b),
        c(c) {}
  Idx a, b, c;
};

struct IndexOutOfRangeError : RegsemError {
  using RegsemError::RegsemError;
};

/// A requested construction would exceed a configured cap.
struct CapExceededError : RegsemError {
  using RegsemError::RegsemError;
};

struct NotIdempotentError : RegsemError {
  using RegsemError::RegsemError;
};

/// Operation requires a (von Neumann) regular semigroup.
struct NotRegularError : RegsemError {
  using RegsemError::RegsemError;
};

/// Operation requires a regular biordered set (axioms (B1)-(B5) and (R)).
struct NotRegularBiorderError : RegsemError {
  using RegsemError::RegsemError;
};

struct NotChainRelatedError : RegsemError {
  using RegsemError::RegsemError;
};

struct DomainConditionError : RegsemError {
  using RegsemError::RegsemError;
};

/// Relation/table data fed to a constructor violates a structural invariant.
struct InvalidStructureError : RegsemError {
  using RegsemError::RegsemError;
};

struct ParseError : RegsemError {
  using RegsemError::RegsemError;
};

/// A quotient product came out dependent on the choice of sandwich element
/// or class representative. Signals an implementation bug, never a
/// mathematical outcome.
struct WellDefinednessError : RegsemError {
  using RegsemError::RegsemError;
};

/// A statement that is a theorem for the inputs at hand failed to verify.
/// Signals an implementation bug, never a mathematical outcome.
struct TheoremViolationError : RegsemError {
  using RegsemError::RegsemError;
};

struct FactorizationNotFoundError : RegsemError {
  using RegsemError::RegsemError;
};

}  // namespace regsem

#endif  // REGSEM_ERROR_HPP_
