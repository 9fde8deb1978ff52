#pragma once

#include <stdexcept>
#include <string>

namespace ore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text: element strings, scalars, config files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A domain description that does not define a skew derivation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Factorization or iteration ran past its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

}  // namespace ore
