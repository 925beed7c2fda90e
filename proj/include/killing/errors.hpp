// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace killing {

/// Malformed input: bad shapes, out-of-range slots, singular matrices, ...
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A tensor that was declared to carry a symmetry class does not.
/// tag() names the violated sub-equation, e.g. "R:Bianchi".
class InvariantViolation : public InvalidArgument {
 public:
  InvariantViolation(std::string tag, const std::string& what)
      : InvalidArgument(what), tag_(std::move(tag)) {}
  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

class SamplingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition form was requested in a setting where it is not defined.
class UnsupportedForm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold for every valid input failed.
class IdentityViolation : public std::logic_error {
 public:
  IdentityViolation(std::string tag, const std::string& what)
      : std::logic_error(what), tag_(std::move(tag)) {}
  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace killing
