#pragma once

#include <stdexcept>
#include <string>

namespace sah {

// Base of every error raised by the library. The CLI maps the concrete kind
// to an exit code, so keep the hierarchy flat.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

// Vector length does not match the ambient dimension.
class AmbientError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "ambient"; }
};

class ContainmentError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "containment"; }
};

// Linearly dependent input where a basis was required.
class DegeneracyError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "degeneracy"; }
};

class OrthogonalityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "orthogonality"; }
};

class GeometryError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "geometry"; }
};

class PrecisionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precision"; }
};

// A finite model grew past its size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "capacity"; }
};

// Malformed textual input (vector literals, angle expressions, lattices).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

}  // namespace sah
