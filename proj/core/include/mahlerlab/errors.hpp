#ifndef MAHLERLAB_ERRORS_HPP
#define MAHLERLAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mahlerlab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed number-spec or rational-function text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on an argument was violated (q <= 1, H < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole or branch point (log at 0, tan at pi/2 + k*pi).
class SingularInput : public Error {
 public:
  using Error::Error;
};

/// A rational function was evaluated on a ball that meets one of its poles.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// The precision cap was reached before the answer could be certified.
class Undecided : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured size limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Too few data points for an estimate.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// Reading or writing the persistent result store failed.
class StoreError : public Error {
 public:
  using Error::Error;
};

}  // namespace mahlerlab

#endif  // MAHLERLAB_ERRORS_HPP
