#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical precondition was violated (zero constant term, bad index...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Asked for information the truncated series does not carry.
class TruncationError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A recognizer (period search, polynomial search...) found nothing.
class RecognitionError : public Error {
 public:
  using Error::Error;
};

// A candidate was found but failed re-verification at higher order.
class VerificationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace qseries
