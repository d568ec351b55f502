#ifndef MATSUO_ERRORS_HPP
#define MATSUO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace matsuo {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Operands belong to different field instances.
class MixedFields : public Error {
 public:
  using Error::Error;
};

class BadCharacteristic : public Error {
 public:
  using Error::Error;
};

class BadEta : public Error {
 public:
  using Error::Error;
};

// Descriptor strings (fields, groups, root system types) that fail to parse.
// `column` is 1-based and points at the offending character.
class DescriptorError : public Error {
 public:
  DescriptorError(const std::string& what, std::string text, std::size_t column)
      : Error(what + " in '" + text + "' at column " + std::to_string(column)),
        text_(std::move(text)),
        column_(column) {}

  const std::string& text() const { return text_; }
  std::size_t column() const { return column_; }

 private:
  std::string text_;
  std::size_t column_;
};

class UnsupportedType : public Error {
 public:
  using Error::Error;
};

class FischerAxiomViolation : public Error {
 public:
  using Error::Error;
};

class WrongFamily : public Error {
 public:
  using Error::Error;
};

class MixedAlgebras : public Error {
 public:
  using Error::Error;
};

class NotSemisimple : public Error {
 public:
  using Error::Error;
};

class NoSqrt3 : public Error {
 public:
  using Error::Error;
};

class CircleRelationViolated : public Error {
 public:
  using Error::Error;
};

class NotRootAutomorphism : public Error {
 public:
  using Error::Error;
};

// A constructed map failed its exact verification; indicates a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace matsuo

#endif  // MATSUO_ERRORS_HPP
