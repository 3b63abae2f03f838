#include "wfa/any_automaton.hpp"

namespace wfa {

AutomatonKind kind_of(const AnyAutomaton& a) {
  return std::visit([](const auto& typed) { return kind_of(typed); }, a);
}

SemiringId semiring_of(const AnyAutomaton& a) {
  return std::visit(
      [](const auto& typed) {
        return std::visit(
            [](const auto& m) {
              return std::remove_cvref_t<decltype(m)>::semiring_type::id;
            },
            typed);
      },
      a);
}

std::size_t state_count(const AnyAutomaton& a) {
  return std::visit(
      [](const auto& typed) { return std::visit([](const auto& m) { return m.size(); }, typed); },
      a);
}

}  // namespace wfa
