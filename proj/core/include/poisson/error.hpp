#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace poisson {

/// Short general-format rendering of a real for error messages.
inline std::string format_real(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension or order parameters that do not describe a valid sphere.
class InvalidContext : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point too close to a field source.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic that would not fit the requested result type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to converge or to reach its accuracy target.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Series truncation could not meet the requested tolerance before the cap.
class TruncationError : public NumericError {
 public:
  TruncationError(const std::string& what, std::size_t suggested_l_max)
      : NumericError(what), suggested_l_max_(suggested_l_max) {}

  std::size_t suggested_l_max() const noexcept { return suggested_l_max_; }

 private:
  std::size_t suggested_l_max_;
};

/// Operands produced with incompatible normalizations.
class FlavorMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace poisson
