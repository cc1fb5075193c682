#pragma once

#include <stdexcept>
#include <string>

namespace gwloc {

/// Violated precondition or malformed input.
class invalid_input : public std::runtime_error {
 public:
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

/// A weight assignment produced a zero where an invertible scalar is
/// required (Euler-class inversion, flag weight, twist factor).  The caller
/// is expected to resample with a fresh seed.
class non_generic_weights : public std::runtime_error {
 public:
  explicit non_generic_weights(const std::string& what)
      : std::runtime_error(what) {}
};

/// Marked-point insertions requested on a pipeline that only supports k = 0.
class unsupported_insertions : public std::runtime_error {
 public:
  explicit unsupported_insertions(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gwloc
