#pragma once

#include <stdexcept>
#include <string>

namespace cylinderlab {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidDirection : public Error {
 public:
  using Error::Error;
};

class DegenerateLine : public Error {
 public:
  using Error::Error;
};

class DegeneratePair : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidCylinderSpec : public Error {
 public:
  using Error::Error;
};

class DegreeTooHigh : public Error {
 public:
  using Error::Error;
};

class NotRepresentable : public Error {
 public:
  using Error::Error;
};

class SizeViolation : public Error {
 public:
  using Error::Error;
};

class NotAMultiset : public Error {
 public:
  using Error::Error;
};

class InvalidBijection : public Error {
 public:
  using Error::Error;
};

class ScaleRefused : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent JSON input. The message names the offending field.
class JsonError : public Error {
 public:
  using Error::Error;
};

}  // namespace cylinderlab
