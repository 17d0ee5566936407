#pragma once

#include <stdexcept>
#include <string>

namespace cdskernel {

// Violated precondition or malformed input.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured work cap was exceeded. Exhaustive routines fail loudly
// instead of silently returning a wrong or partial answer.
class ResourceError : public std::runtime_error {
public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cdskernel
