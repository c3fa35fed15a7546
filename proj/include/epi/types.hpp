#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace epi {

using Letter = std::uint8_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed argument to a library call.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input text that does not follow the grammar.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Precondition violated by a well-formed value (e.g. invalid intercept).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InsufficientIntercept : public Error {
 public:
  using Error::Error;
};

class HorizonExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Recurrence without a dominant root in the search bracket.
class BadRecurrence : public Error {
 public:
  using Error::Error;
};

}  // namespace epi
