#pragma once

#include <stdexcept>
#include <string>

namespace starramsey {

/// A precondition on an argument (parity, range, sum) does not hold.
class InvalidParameter : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// The parameters are well-formed but outside what the closed forms cover.
class UnsupportedParameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A builder produced a coloring that failed its own postcondition.
class ConstructionFailed : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The exhaustive search would exceed its configured budget.
class InfeasibleInstance : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace starramsey
