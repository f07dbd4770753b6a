#pragma once

#include <stdexcept>
#include <string>

namespace selt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a non-strict partition, an out-of-range parameter, a
/// bad shading, an unparsable JSON document.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ContainmentError : public Error {
 public:
  using Error::Error;
};

/// Fewer labels than boxes; axiom (i) cannot be satisfied.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class NotACorner : public Error {
 public:
  using Error::Error;
};

class NotASubset : public Error {
 public:
  using Error::Error;
};

/// A tableau failed validation where a valid one was required.
class InvalidTableau : public Error {
 public:
  using Error::Error;
};

class BadTableau : public Error {
 public:
  using Error::Error;
};

class NotSlidable : public Error {
 public:
  using Error::Error;
};

class HomogeneityError : public Error {
 public:
  using Error::Error;
};

/// The sigma-basis solve was inconsistent or not unique. Never expected.
class SolveError : public Error {
 public:
  using Error::Error;
};

class FormError : public Error {
 public:
  using Error::Error;
};

class DivisibilityError : public Error {
 public:
  using Error::Error;
};

}  // namespace selt
