#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Malformed or out-of-range input. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A move whose parameters do not fit the word it is applied to.
class InapplicableMove : public InputError {
public:
  using InputError::InputError;
};

// A configured cap (state-sum crossings, search frontier) was exceeded.
// Maps to CLI exit code 3.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace braidforge
