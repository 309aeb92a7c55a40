#pragma once

#include <stdexcept>
#include <string>

namespace fairchain {

// Base for every error caused by caller-supplied data or configuration.
// The CLI maps these to exit code 2; anything else escaping to main is an
// internal invariant violation and exits 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exposure gap is undefined when both groups have zero exposure in the
// evaluated prefix.
class UndefinedGapError : public InputError {
 public:
  using InputError::InputError;
};

// Pairwise accuracy is undefined when a required (group, label) quadrant is
// empty; carries the quadrant's name, e.g. "male_1".
class UndefinedAccuracyError : public InputError {
 public:
  explicit UndefinedAccuracyError(const std::string& quadrant)
      : UndefinedAccuracyError(
            quadrant, "pairwise accuracy undefined: quadrant " + quadrant +
                          " is empty") {}
  UndefinedAccuracyError(const std::string& quadrant, const std::string& msg)
      : InputError(msg), quadrant_(quadrant) {}
  const std::string& quadrant() const { return quadrant_; }

 private:
  std::string quadrant_;
};

// A fix method was requested in a mode it does not support (delta matching
// with unequal quadrant sizes, or inside a score composition).
class FixModeError : public InputError {
 public:
  using InputError::InputError;
};

// Per-group normalization over a group whose scores are all identical.
class DegenerateDistributionError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace fairchain
