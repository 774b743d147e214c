#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cellx {

// Caller handed in inconsistent arguments (mismatched rings, bad shapes, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument is well formed but outside the operation's domain (inverse of a
// non-unit, disk(0), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A complex that breaks d∘d = 0 or has malformed entries.
class InvalidComplex : public std::runtime_error {
 public:
  InvalidComplex(const std::string& what, int degree)
      : std::runtime_error(what), degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

// Brute-force enumeration refused because the search space exceeds a guard.
class GuardRefusal : public std::runtime_error {
 public:
  GuardRefusal(const std::string& what, double required_log2)
      : std::runtime_error(what), required_log2_(required_log2) {}
  // log2 of the search space that would have been needed.
  double required_log2() const noexcept { return required_log2_; }

 private:
  double required_log2_;
};

}  // namespace cellx
