#pragma once

#include <stdexcept>
#include <string>

namespace fracdiff {

/// Bad parameters, malformed grids, unknown problem names. Maps to CLI exit code 2.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical failure inside a solve. Maps to CLI exit code 1.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace fracdiff
