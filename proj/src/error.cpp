#include "wfa/error.hpp"

namespace wfa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::semiring_mismatch: return "semiring-mismatch";
    case ErrorCode::index_mismatch: return "index-mismatch";
    case ErrorCode::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorCode::duplicate_name: return "duplicate-name";
    case ErrorCode::unknown_name: return "unknown-name";
    case ErrorCode::unknown_symbol: return "unknown-symbol";
    case ErrorCode::length_mismatch: return "length-mismatch";
    case ErrorCode::incompatible_semantics: return "incompatible-semantics";
    case ErrorCode::not_crisp: return "not-crisp";
    case ErrorCode::validation_failed: return "validation-failed";
    case ErrorCode::condition_unsatisfied: return "condition-unsatisfied";
    case ErrorCode::enumeration_limit: return "enumeration-limit";
    case ErrorCode::arithmetic_overflow: return "arithmetic-overflow";
    case ErrorCode::no_theorem: return "no-theorem";
    case ErrorCode::parse_error: return "parse-error";
  }
  return "unknown-error";
}

}  // namespace wfa
