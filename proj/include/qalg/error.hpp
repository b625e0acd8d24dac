#pragma once

#include <stdexcept>
#include <string>

namespace qalg {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

// Raised when two algebra elements/matrices from different rings meet.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class NotAUnitError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured candidate budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qalg
