#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grouplab {

// Base of every error thrown by the library.
class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation needed more elements, cosets or subgroups than the configured
// bounds allow. Distinct from a definitive negative answer.
class ResourceExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

class OrderExceedsCap : public ResourceExceeded {
 public:
  using ResourceExceeded::ResourceExceeded;
};

class IndexExceedsCap : public ResourceExceeded {
 public:
  using ResourceExceeded::ResourceExceeded;
};

class NotNormal : public GroupError {
 public:
  using GroupError::GroupError;
};

// Violated precondition: degree mismatch, element outside the parent group,
// containment that does not hold, bad construction parameter.
class PreconditionError : public GroupError {
 public:
  using GroupError::GroupError;
};

class ParseError : public GroupError {
 public:
  ParseError(std::string const &what, std::size_t line)
      : GroupError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        _line(line) {}

  std::size_t line() const noexcept { return _line; }

 private:
  std::size_t _line;
};

} // namespace grouplab
