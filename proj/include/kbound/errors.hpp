#pragma once

#include <stdexcept>
#include <string>

namespace kbound {

/// Bad argument to an operation (violated precondition on the caller side).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A formula was asked for a value outside the domain where it is defined.
class OutOfDomain : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A parameter (typically the scroll index a) lies outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Inputs are mutually inconsistent, e.g. a quantity that must be an integer is not.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kbound
