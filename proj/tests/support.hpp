#ifndef WFA_TESTS_SUPPORT_HPP
#define WFA_TESTS_SUPPORT_HPP

#include <string>

#include "wfa/semantics.hpp"
#include "wfa/semiring.hpp"

namespace wfa::testing {

template <class F>
void for_each_semiring(F&& f) {
  for (auto id : kAllSemirings) dispatch_semiring(id, f);
}

inline constexpr AutomatonKind kAllKinds[] = {AutomatonKind::sequential, AutomatonKind::mealy,
                                              AutomatonKind::moore, AutomatonKind::cd_mealy,
                                              AutomatonKind::cd_moore};

inline constexpr Semantics kAllTags[] = {Semantics::seq, Semantics::one_n, Semantics::n_one,
                                         Semantics::s, Semantics::cd};

}  // namespace wfa::testing

#endif  // WFA_TESTS_SUPPORT_HPP
