#pragma once

#include <stdexcept>
#include <string>

namespace prover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed surface text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A form that cannot be turned into a term (unknown function, bad arity,
// bad macro usage).
class TranslateError : public Error {
 public:
  using Error::Error;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

// Fuel or step budget exhausted.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class HintError : public Error {
 public:
  using Error::Error;
};

}  // namespace prover
