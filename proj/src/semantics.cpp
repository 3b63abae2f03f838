#include "wfa/semantics.hpp"

namespace wfa {

std::string_view to_string(Semantics tag) {
  switch (tag) {
    case Semantics::seq: return "seq";
    case Semantics::one_n: return "1n";
    case Semantics::n_one: return "n1";
    case Semantics::s: return "s";
    case Semantics::cd: return "cd";
  }
  return "?";
}

Semantics semantics_from_name(std::string_view name) {
  for (auto t : {Semantics::seq, Semantics::one_n, Semantics::n_one, Semantics::s, Semantics::cd})
    if (to_string(t) == name) return t;
  throw Error(ErrorCode::unknown_name,
              "unknown semantics '" + std::string(name) + "' (expected seq, 1n, n1, s or cd)");
}

bool compatible(AutomatonKind kind, Semantics tag) {
  switch (kind) {
    case AutomatonKind::sequential: return tag == Semantics::seq;
    case AutomatonKind::mealy:
      return tag == Semantics::one_n || tag == Semantics::n_one || tag == Semantics::s;
    case AutomatonKind::moore: return tag == Semantics::one_n || tag == Semantics::n_one;
    case AutomatonKind::cd_mealy: return tag == Semantics::cd || compatible(AutomatonKind::mealy, tag);
    case AutomatonKind::cd_moore: return tag == Semantics::cd || compatible(AutomatonKind::moore, tag);
  }
  return false;
}

void require_compatible(AutomatonKind kind, Semantics tag) {
  if (!compatible(kind, tag))
    throw Error(ErrorCode::incompatible_semantics,
                "semantics '" + std::string(to_string(tag)) + "' does not apply to " +
                    std::string(to_string(kind)) + " automata");
}

}  // namespace wfa
