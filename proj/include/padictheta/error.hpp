#pragma once

#include <stdexcept>
#include <string>

namespace padictheta {

// Raised for violated preconditions on user-supplied data.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal invariant fails, e.g. an inexact exact division.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace padictheta
