#pragma once

#include <stdexcept>
#include <string>

namespace frameq {

enum class ErrorKind {
  invalid_argument,
  dimension_mismatch,
  negative_entry,
  entry_above_bound,
  wrong_total,
  complex_values,
  missing_source,
  ordering_failure,
  invariant_violation,
  parse_error,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type; `kind()` lets callers
/// (notably the CLI exit-code mapping) tell the cases apart.
class FrameError : public std::runtime_error {
 public:
  FrameError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace frameq
