#pragma once

#include <stdexcept>
#include <string>

namespace projlab {

// Argument outside the mathematical domain of an operation (bad k, non-prime p,
// mismatched fields or dimensions).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive sweep would exceed the configured enumeration cap.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that makes the requested object undefined (x == y for a line, etc.).
class DegenerateInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Value cannot be expressed in the requested representation (vertical line under duality).
class NotRepresentableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A theorem hypothesis that the caller must guarantee does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Configuration object fails its structural invariants (Furstenberg configs).
class ConfigInvalidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Rejection sampling gave up.
class RetryLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Experiment or corpus configuration failed schema validation. The message
// starts with the offending field path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace projlab
