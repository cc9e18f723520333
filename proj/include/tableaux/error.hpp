#pragma once

#include <stdexcept>
#include <string>

namespace tableaux {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape data that is not weakly decreasing, or a prepend below the first part.
class InvalidShape : public Error {
 public:
  using Error::Error;
};

// A chain whose steps are not horizontal strips, or a filling that is not
// column-strict.
class InvalidTableau : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

// A truncated hopscotch square whose target column lies outside the window.
class NotComputable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when two routes that must agree do not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tableaux
