#include "wfa/semiring.hpp"

#include <string>

namespace wfa {

SemiringId semiring_from_name(std::string_view name) {
  for (SemiringId id : kAllSemirings)
    if (semiring_name(id) == name) return id;
  throw Error(ErrorCode::unknown_name,
              "unknown semiring '" + std::string(name) +
                  "' (expected boolean, godel, viterbi, tropical, naturals or rationals)");
}

std::string_view semiring_name(SemiringId id) {
  return dispatch_semiring(id, [](auto tag) -> std::string_view {
    return decltype(tag)::type::name;
  });
}

SemiringInfo semiring_info(SemiringId id) {
  return dispatch_semiring(id, [](auto tag) { return info<typename decltype(tag)::type>(); });
}

}  // namespace wfa
