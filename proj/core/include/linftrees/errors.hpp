#pragma once

#include <stdexcept>
#include <string>

namespace linftrees {

/// Malformed input file or string. Mapped to exit code 2 by the CLI.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation invoked outside its supported size range. Exit code 3 in the CLI.
class GuardViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace linftrees
