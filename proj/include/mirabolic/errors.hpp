#pragma once

#include <stdexcept>
#include <string>

namespace mirabolic {

/// Raised when an operation is handed input outside its mathematical domain
/// (wrong sizes, invalid parameters, violated preconditions).
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

/// Raised when the calculus genuinely does not decide the requested value,
/// as opposed to rejecting the input.  Callers that want to distinguish
/// "no answer exists here" from "bad input" can catch this separately.
struct undetermined_error : domain_error {
  using domain_error::domain_error;
};

/// Raised by the text grammars.  Carries the byte offset of the offending
/// character in the original input.
struct parse_error : std::runtime_error {
  std::size_t position;

  parse_error(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace mirabolic
