#pragma once

#include <stdexcept>
#include <string>

namespace zfa {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands belong to different atom pools (or an atom lies outside the pool).
struct PoolMismatchError : Error {
  using Error::Error;
};

// A full enumeration was requested past the configured cap.
struct EnumerationCapError : Error {
  using Error::Error;
};

// A universe or stage construction would exceed its size budget.
struct BudgetError : Error {
  BudgetError(const std::string& what, std::size_t projected)
      : Error(what), projected_size(projected) {}
  std::size_t projected_size;
};

// A set operation was applied to an atom.
struct NotASetError : Error {
  using Error::Error;
};

// decode_pair was applied to an element that is not a Kuratowski pair.
struct NotAPairError : Error {
  using Error::Error;
};

// Minimal supports are incomparable, so no least support exists.
struct NoLeastSupportError : Error {
  using Error::Error;
};

// Text could not be parsed; carries a 1-based source position.
struct ParseError : Error {
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " at " + std::to_string(line_) + ":" +
              std::to_string(column_)),
        line(line_),
        column(column_) {}
  int line;
  int column;
};

// A term or formula still has free variables where a closed one is required.
struct OpenTermError : Error {
  using Error::Error;
};

// A denoted element fell outside the universe's rank/size budget.
struct OutOfUniverseError : Error {
  OutOfUniverseError(const std::string& what, std::string witness_)
      : Error(what), witness(std::move(witness_)) {}
  std::string witness;  // printed in element literal syntax
};

// orbit_count was given a set that is not closed under the group action.
struct NotClosedError : Error {
  NotClosedError(const std::string& what, std::string witness_)
      : Error(what), witness(std::move(witness_)) {}
  std::string witness;
};

// A bounded counterexample search ran out of budget.
struct SearchExhaustedError : Error {
  using Error::Error;
};

// A value does not satisfy the tagged-element encoding invariants.
struct MalformedTaggedError : Error {
  using Error::Error;
};

// An interpreted operation produced a value outside the built stages.
struct OutOfStageError : Error {
  OutOfStageError(const std::string& what, std::string witness_)
      : Error(what), witness(std::move(witness_)) {}
  std::string witness;
};

}  // namespace zfa
