#pragma once

#include <stdexcept>
#include <string>

namespace ccd {

// Malformed input file; message carries the line/field location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input parsed but violates a model invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the reformulation builders when a constraint descriptor is inconsistent.
class BuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccd
