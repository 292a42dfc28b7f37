#pragma once

#include <stdexcept>
#include <string>

namespace windtree {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// sanov_decompose: the matrix is not in <u^2, tu^2>.
class NotInGamma0 : public Error {
 public:
  using Error::Error;
};

// induced_u2_matrix: image left span{h^sigma, v^sigma} after substitution.
class SubstitutionFailure : public Error {
 public:
  using Error::Error;
};

class UnclassifiableSuffixSet : public Error {
 public:
  using Error::Error;
};

class NonPositiveValuation : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NonPositiveInput : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class NonCanonical : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace windtree
