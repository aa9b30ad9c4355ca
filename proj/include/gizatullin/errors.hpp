#pragma once

#include <stdexcept>
#include <string>

namespace giz {

// Every error raised by the library derives from Error so front-ends can map
// them onto exit codes without catching unrelated exceptions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ChainNotAdmissible : public Error {
 public:
  using Error::Error;
};

class NonSncContraction : public Error {
 public:
  using Error::Error;
};

class NotStandard : public Error {
 public:
  using Error::Error;
};

class InvalidGraph : public Error {
 public:
  using Error::Error;
};

class InvalidFiber : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class NotGizatullin : public Error {
 public:
  using Error::Error;
};

class ToricInput : public Error {
 public:
  using Error::Error;
};

class BadToricType : public Error {
 public:
  using Error::Error;
};

class BadParameters : public Error {
 public:
  using Error::Error;
};

class EmptyPolynomial : public Error {
 public:
  using Error::Error;
};

// Raised when a fact the construction guarantees turns out false; always a bug
// or corrupted input, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace giz
