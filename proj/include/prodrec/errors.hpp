#pragma once

#include <stdexcept>

namespace prodrec {

/// Malformed textual input: rationals, coefficient lists, ranges.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition of an operation does not hold for the data given.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An identity that must hold by construction was observed to fail.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace prodrec
