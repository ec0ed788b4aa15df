#pragma once

#include <stdexcept>
#include <string>

namespace qswitch {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A matrix expected to be Hermitian is not (within tolerance).
struct NotHermitian : Error {
  using Error::Error;
};

// A matrix expected to be a density matrix fails the trace/positivity checks.
struct NotDensity : Error {
  using Error::Error;
};

// A state vector or qubit amplitude pair is not unit-norm.
struct NotNormalized : Error {
  using Error::Error;
};

// Operands have incompatible or unexpected dimensions.
struct DimensionMismatch : Error {
  using Error::Error;
};

// A sweep specification has an out-of-range or inconsistent field.
struct InvalidSpec : Error {
  using Error::Error;
};

// A file could not be opened or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace qswitch
