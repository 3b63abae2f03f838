#ifndef WFA_ERROR_HPP
#define WFA_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace wfa {

enum class ErrorCode {
  invalid_argument,
  semiring_mismatch,
  index_mismatch,
  alphabet_mismatch,
  duplicate_name,
  unknown_name,
  unknown_symbol,
  length_mismatch,
  incompatible_semantics,
  not_crisp,
  validation_failed,
  condition_unsatisfied,
  enumeration_limit,
  arithmetic_overflow,
  no_theorem,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wfa

#endif  // WFA_ERROR_HPP
