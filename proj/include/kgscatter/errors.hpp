#pragma once

#include <stdexcept>
#include <string>

namespace kgscatter {

// Base for every failure raised by the library. Each subclass maps to one
// distinct way a computation can be refused or go wrong.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the admissible domain (bad parameters, non-finite values,
// b at a pole of the Kummer series, |z| above the series cap).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Power series did not reach its tolerance within the term budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Fractional power requested on the negative real axis without a branch choice.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Interior wavenumber q (or k2 for the square barrier) is numerically zero.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  using Error::Error;
};

// Oracle integration violated current conservation: the step is too coarse.
class StepError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace kgscatter
