#pragma once

#include <stdexcept>

namespace lsys {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter outside the admissible domain, e.g. Im(lambda0) <= 0.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Rational function evaluated at (or numerically at) a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A construction whose result would have a zero denominator.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Rational function is not a Stieltjes transform of a finite positive atomic measure.
class NotHerglotzAtomicError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// (T - zI) is numerically singular: z lies in the spectrum.
class SingularResolventError : public Error {
 public:
  using Error::Error;
};

class IncompatibleError : public Error {
 public:
  using Error::Error;
};

// Im V(i) <= 0.
class NotHerglotzError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Foster data violating a0 >= 0, a_k > 0, b_k > 0 or distinct b_k.
class SpecError : public Error {
 public:
  using Error::Error;
};

// Malformed descriptor or flag value.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lsys
