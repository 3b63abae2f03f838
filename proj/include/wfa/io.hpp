#ifndef WFA_IO_HPP
#define WFA_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "wfa/any_automaton.hpp"

namespace wfa {

/// Reads one automaton document. Syntax errors carry line and column;
/// semantic errors name the offending field or record, e.g. "transitions[2]".
/// Every failure is a wfa::Error.
AnyAutomaton parse_automaton(std::string_view text);

/// Pretty-printed JSON; parse_automaton(serialize(a)) == a.
std::string serialize(const AnyAutomaton& a);

template <class A>
std::string serialize(const A& a) {
  using S = typename A::semiring_type;
  return serialize(AnyAutomaton(TypedAutomaton<S>(a)));
}

AnyAutomaton read_automaton_file(const std::filesystem::path& path);
void write_automaton_file(const std::filesystem::path& path, const AnyAutomaton& a);

}  // namespace wfa

#endif  // WFA_IO_HPP
