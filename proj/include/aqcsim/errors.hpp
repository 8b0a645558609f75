#pragma once

#include <stdexcept>
#include <string>

namespace aqcsim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter violates a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A configured resource guard (site count, dense size) would be exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An iterative solver did not reach its tolerance within the iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The propagated state left the unit sphere by more than the abort threshold.
class NormDriftError : public Error {
 public:
  using Error::Error;
};

}  // namespace aqcsim
