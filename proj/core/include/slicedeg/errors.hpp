#pragma once

#include <stdexcept>
#include <string>

namespace slicedeg {

// Base for every failure caused by input data (exit code 1 at the CLI).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed knot database: syntax, type, invariant or duplicate-name errors.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class NotLSpaceForm : public DataError {
 public:
  using DataError::DataError;
};

class VsUnavailable : public DataError {
 public:
  using DataError::DataError;
};

// Two independent V_s computations produced different sequences.
class OracleDisagreement : public DataError {
 public:
  using DataError::DataError;
};

class WindowTooSmall : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class UnknownKnot : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace slicedeg
