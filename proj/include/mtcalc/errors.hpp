#pragma once

#include <stdexcept>
#include <string>

namespace mtcalc {

// Rejected input or unsupported parameter combination (CLI exit code 2).
class validation_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant (CLI exit code 3).
class internal_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mtcalc
