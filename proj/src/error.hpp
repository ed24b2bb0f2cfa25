#pragma once

#include <stdexcept>
#include <string>

namespace qflag {

// A precondition of a computation was violated by otherwise well-formed input
// (non-dominant weight, q outside (0,1), inexact division, ...).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: unparsable rational, wrong vector length, bad JSON shape.
class InvalidArgument : public std::invalid_argument {
public:
  explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qflag
