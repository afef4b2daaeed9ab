#pragma once

#include <stdexcept>
#include <string>

namespace lgvsym {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// exact_div hit a leading term it could not cancel, or a remainder survived.
class NotDivisible : public Error {
 public:
  using Error::Error;
};

class IndexUnderflow : public Error {
 public:
  using Error::Error;
};

class UnassignedVariable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class OutOfBounds : public Error {
 public:
  using Error::Error;
};

// A brute-force enumeration or series expansion refused to run because its
// size estimate exceeded a configured limit.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// A factorial tableau cell produced an a-variable index <= 0.
class FactorialIndexError : public Error {
 public:
  using Error::Error;
};

// Precondition violations (bad partition text, k out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace lgvsym
