#ifndef WFA_ANY_AUTOMATON_HPP
#define WFA_ANY_AUTOMATON_HPP

#include <variant>

#include "wfa/automata.hpp"
#include "wfa/semiring.hpp"

namespace wfa {

/// Any automaton model over a fixed semiring.
template <Semiring S>
using TypedAutomaton =
    std::variant<SequentialWfa<S>, MealyWfa<S>, MooreWfa<S>, CrispMealy<S>, CrispMoore<S>>;

/// Any automaton model over any catalog semiring, as read from a file.
using AnyAutomaton =
    std::variant<TypedAutomaton<BooleanSemiring>, TypedAutomaton<GodelSemiring>,
                 TypedAutomaton<ViterbiSemiring>, TypedAutomaton<TropicalSemiring>,
                 TypedAutomaton<NaturalsSemiring>, TypedAutomaton<RationalsSemiring>>;

template <Semiring S>
AutomatonKind kind_of(const TypedAutomaton<S>& a) {
  return std::visit([](const auto& m) { return std::remove_cvref_t<decltype(m)>::kind; }, a);
}

AutomatonKind kind_of(const AnyAutomaton& a);
SemiringId semiring_of(const AnyAutomaton& a);
std::size_t state_count(const AnyAutomaton& a);

/// Calls f(typed_automaton_variant) with the semiring resolved statically.
template <class F>
decltype(auto) visit_semiring(const AnyAutomaton& a, F&& f) {
  return std::visit(std::forward<F>(f), a);
}

}  // namespace wfa

#endif  // WFA_ANY_AUTOMATON_HPP
