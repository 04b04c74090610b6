#pragma once

#include <stdexcept>
#include <string>

namespace vvilab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Points, tangents or vectors whose dimensions or base points disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computation left the representable double range (e.g. exp overflow).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain: NaN entries, t outside [0,1],
/// nonpositive orthant coordinates, malformed bounds.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Lookup of a catalog id that is not registered.
class UnknownIdError : public Error {
 public:
  using Error::Error;
};

/// A catalog function failed to evaluate at a point.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration text or command-line values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vvilab
