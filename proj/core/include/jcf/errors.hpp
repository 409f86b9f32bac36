#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jcf {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit the operation (non-square operator, size mismatch).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonMonic : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Text could not be read as a Rational.
class InvalidRational : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class InvalidDecomposition : public Error {
 public:
  using Error::Error;
};

class NotABasis : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

/// Two independently computed results that must coincide did not.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace jcf
