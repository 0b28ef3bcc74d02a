#pragma once

#include <stdexcept>

namespace ktdom {

// Invalid combination of user-supplied parameters or malformed input.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Degree parameter below the supported minimum (total domination needs
// every vertex to have a neighbor in the set, so degree >= 2 is required
// of the family parameters).
class MinimumDegreeError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// The requested quantity does not exist: a k-tuple total dominating set
// exists if and only if the minimum degree is at least k.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ktdom
