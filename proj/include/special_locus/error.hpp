#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace special_locus {

// Every failure carries a stable, machine-readable reason string next to the
// human-readable message. The CLI maps reasons onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string reason, const std::string& message)
      : std::runtime_error(message), reason_(std::move(reason)) {}

  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string reason_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("DomainError", message) {}
};

class ZeroPolynomial : public Error {
 public:
  explicit ZeroPolynomial(const std::string& where)
      : Error("ZeroPolynomial", where + ": zero polynomial") {}
};

class ConstantPolynomial : public Error {
 public:
  explicit ConstantPolynomial(const std::string& where)
      : Error("ConstantPolynomial", where + ": constant polynomial") {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("SyntaxError", "at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedVariable : public Error {
 public:
  UnsupportedVariable(std::size_t position, const std::string& name)
      : Error("UnsupportedVariable",
              "at position " + std::to_string(position) + ": unsupported variable '" + name +
                  "' (only X and Y are allowed)"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class InvalidDiscriminant : public Error {
 public:
  explicit InvalidDiscriminant(long long d)
      : Error("InvalidDiscriminant",
              "invalid discriminant " + std::to_string(d) +
                  " (must be negative and congruent to 0 or 1 mod 4)") {}
};

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& message)
      : Error("PrecisionExhausted", message) {}
};

class AxisLineFactor : public Error {
 public:
  enum class Kind { vertical, horizontal };

  explicit AxisLineFactor(Kind kind)
      : Error(kind == Kind::vertical ? "AxisLineFactor:vertical" : "AxisLineFactor:horizontal",
              kind == Kind::vertical
                  ? "curve contains a vertical line (nonconstant factor in X alone)"
                  : "curve contains a horizontal line (nonconstant factor in Y alone)"),
        kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class UnknownSuite : public Error {
 public:
  explicit UnknownSuite(const std::string& name)
      : Error("UnknownSuite", "unknown verification suite '" + name + "'") {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message) : Error("InternalError", message) {}
};

}  // namespace special_locus
