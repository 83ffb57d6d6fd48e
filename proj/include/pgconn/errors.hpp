#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pgconn {

// Precondition violations on caller-supplied values.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The group lacks the structure an operation relies on (e.g. non-nilpotent).
class UnsupportedStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class WitnessNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured search bound was exceeded.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource limit hit part-way through an enumeration; keeps what was found.
template <class T>
class PartialResult : public ResourceLimit {
 public:
  PartialResult(const std::string& what, std::vector<T> partial)
      : ResourceLimit(what), partial_(std::move(partial)) {}
  const std::vector<T>& partial() const { return partial_; }

 private:
  std::vector<T> partial_;
};

}  // namespace pgconn
