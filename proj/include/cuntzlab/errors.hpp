#pragma once

#include <stdexcept>
#include <string>

namespace cuntzlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vectors from different Hilbert-space backends were combined.
struct BackendMismatch : Error {
  using Error::Error;
};

// Bad argument values (index out of range, |lambda| >= 1, ...).
struct DomainError : Error {
  using Error::Error;
};

// Word enumeration would exceed the term-count cap.
struct DepthOverflow : Error {
  using Error::Error;
};

// A subspace operation required a co-invariant input.
struct NotCoinvariant : Error {
  double residual;
  explicit NotCoinvariant(double r)
      : Error("subspace is not co-invariant, residual " + std::to_string(r)),
        residual(r) {}
};

// A subspace operation required a wandering input.
struct NotWandering : Error {
  double overlap;
  explicit NotWandering(double o)
      : Error("subspace is not wandering, overlap " + std::to_string(o)),
        overlap(o) {}
};

// L equals SL: the representation restricts and the decomposition is void.
struct ReducingSubspace : Error {
  using Error::Error;
};

// Window too small for an operator to map it into itself.
struct WindowTooSmall : Error {
  int required;
  explicit WindowTooSmall(int req)
      : Error("window too small, need at least M = " + std::to_string(req)),
        required(req) {}
};

// Orthonormalization dropped every input vector.
struct EmptySpan : Error {
  using Error::Error;
};

// Filter bank whose polyphase matrix is not unitary.
struct InvalidFilterBank : Error {
  double residual;
  explicit InvalidFilterBank(double r)
      : Error("polyphase matrix is not unitary, residual " + std::to_string(r)),
        residual(r) {}
};

// Malformed input files / JSON.
struct IoError : Error {
  using Error::Error;
};

}  // namespace cuntzlab
