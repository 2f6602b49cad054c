#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secantq {

// Raised when a constructor receives NaN or Inf.
struct NonFiniteValue : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Zero-norm vector where an inverse or direction is required.
struct ZeroVector : std::domain_error {
  using std::domain_error::domain_error;
};

// Multivector with vanishing Clifford norm (a zero divisor such as 1+e1).
struct NonInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

// Three domain points too close to a line to define a unique secant plane.
struct CollinearPoints : std::domain_error {
  using std::domain_error::domain_error;
};

struct CoincidentAbscissae : std::domain_error {
  using std::domain_error::domain_error;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t pos, const std::string& message)
      : std::runtime_error("syntax error at offset " + std::to_string(pos) + ": " + message),
        pos_(pos),
        message_(message) {}

  std::size_t pos() const noexcept { return pos_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t pos_;
  std::string message_;
};

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& reason)
      : std::runtime_error("evaluation error: " + reason), reason_(reason) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

}  // namespace secantq
