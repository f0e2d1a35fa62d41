#pragma once

#include <stdexcept>
#include <string>

namespace amnm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// An input exceeds a size cap of an exhaustive algorithm.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input objects do not have the shape an operation expects (e.g. a weight
/// whose length differs from the semilattice, or a non-N_min semilattice).
class StructureMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace amnm
