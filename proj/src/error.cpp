#include "frameq/error.hpp"

namespace frameq {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::negative_entry: return "negative_entry";
    case ErrorKind::entry_above_bound: return "entry_above_bound";
    case ErrorKind::wrong_total: return "wrong_total";
    case ErrorKind::complex_values: return "complex_values";
    case ErrorKind::missing_source: return "missing_source";
    case ErrorKind::ordering_failure: return "ordering_failure";
    case ErrorKind::invariant_violation: return "invariant_violation";
    case ErrorKind::parse_error: return "parse_error";
  }
  return "unknown";
}

}  // namespace frameq
