#pragma once

#include <stdexcept>
#include <string>

namespace ade {

// Base of every error raised by the library. The CLI maps InputError to
// exit code 2 and everything else to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (bad type strings, shapes, file schemas).
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidType : public InputError {
 public:
  using InputError::InputError;
};

class ShapeMismatch : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& path, const std::string& what)
      : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class UnsupportedType : public InputError {
 public:
  using InputError::InputError;
};

class ClosureOverflow : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrum : public Error {
 public:
  using Error::Error;
};

class NonIntegralMultiplicity : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class IdenticallyZeroProjection : public Error {
 public:
  using Error::Error;
};

class IllConditioned : public Error {
 public:
  using Error::Error;
};

class NonRationalSpectrum : public Error {
 public:
  using Error::Error;
};

class EdgeRelationViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace ade
