#pragma once

#include <stdexcept>
#include <string>

namespace zetagap {

/// Invalid argument outside a documented precondition. Message names the parameter.
class param_error : public std::invalid_argument {
public:
  explicit param_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A refinement or residual check failed to meet its tolerance.
class accuracy_error : public std::runtime_error {
public:
  explicit accuracy_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Series evaluation requested outside its convergence branch (pi*c > 25).
class branch_error : public std::runtime_error {
public:
  explicit branch_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Gram matrix too ill-conditioned to factor; caller should lower the degree.
class conditioning_error : public std::runtime_error {
public:
  explicit conditioning_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A bracketing search found no sign change in its scan range.
class search_error : public std::runtime_error {
public:
  explicit search_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Failure writing an output artifact.
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zetagap
