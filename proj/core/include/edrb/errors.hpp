#pragma once

#include <stdexcept>
#include <string>

namespace edrb {

// Base class for every error raised by the library. Each subclass maps to one
// failure family so callers (the CLI in particular) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised when a link's success probability falls below kLinkProbabilityFloor.
class DegenerateLink : public Error {
 public:
  using Error::Error;
};

class UnsupportedModulation : public Error {
 public:
  using Error::Error;
};

class NoClosedForm : public Error {
 public:
  using Error::Error;
};

class ApproxUnavailable : public Error {
 public:
  using Error::Error;
};

class QuadratureFailure : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

class BracketFailure : public Error {
 public:
  using Error::Error;
};

class RoutingFailure : public Error {
 public:
  using Error::Error;
};

// Config / parameter documents that fail to parse.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace edrb
