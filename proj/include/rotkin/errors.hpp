#pragma once

#include <stdexcept>
#include <string>

namespace rotkin {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite or otherwise malformed input values.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// An operation was handed quantities expressed in incompatible frames.
class FrameMismatchError : public Error {
 public:
  using Error::Error;
};

// A matrix expected to be skew-symmetric was not, within tolerance.
class NotSkewError : public Error {
 public:
  NotSkewError(const std::string& what, double defect) : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

// A matrix failed the orthogonality test of rotation validation.
class NotOrthogonalError : public Error {
 public:
  NotOrthogonalError(const std::string& what, double defect) : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

// A matrix is orthogonal-like but is not a proper rotation (det != +1).
class ImproperRotationError : public Error {
 public:
  ImproperRotationError(const std::string& what, double det) : Error(what), det_(det) {}
  double det() const { return det_; }

 private:
  double det_;
};

// Rdot*R^T (or R^T*Rdot) failed the skewness test: the derivative is not
// tangent to the rotation group at R.
class InconsistentDerivativeError : public Error {
 public:
  InconsistentDerivativeError(const std::string& what, double defect)
      : Error(what), defect_(defect) {}
  double defect() const { return defect_; }

 private:
  double defect_;
};

// An iteration failed to converge or produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Evaluation was requested outside a trajectory's time domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace rotkin
