#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Raised when a well-formed request falls outside the mathematical domain of an operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input: unparsable numbers, missing fields, wrong shapes.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsp
