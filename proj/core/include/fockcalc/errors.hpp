#pragma once

#include <stdexcept>
#include <string>

namespace fockcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PartitionError : public Error {
 public:
  enum class Kind { NonMonotone, Negative };

  PartitionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A requested coefficient depends on coefficients outside the known region of an operand.
class InsufficientWindow : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a homogeneous charge received a mixed one.
class ChargeMixed : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A partition does not fit in the r x (n - r) box.
class ShapeOutOfBox : public Error {
 public:
  using Error::Error;
};

}  // namespace fockcalc
