#pragma once

#include <stdexcept>
#include <string>

namespace partsep {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: mismatched subsystem counts, invalid index sets, bad options.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Size parameter outside the supported range (e.g. n for lattice enumeration).
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Value violates a type invariant (non-PSD matrix, overlapping blocks, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operation requested on unsupported subsystem dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Pure-state vanishing pattern matches no known class.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

// Certificates that contradict each other.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured result cap.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace partsep
