#ifndef WFA_AUTOMATA_HPP
#define WFA_AUTOMATA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfa/error.hpp"
#include "wfa/names.hpp"
#include "wfa/semiring.hpp"
#include "wfa/sralgebra.hpp"

namespace wfa {

enum class AutomatonKind { sequential, mealy, moore, cd_mealy, cd_moore };

std::string_view to_string(AutomatonKind kind);
AutomatonKind automaton_kind_from_name(std::string_view name);  // throws unknown_name

using Symbol = std::size_t;

/// A pair (u, v) with |u| = |v|: input and output symbols by alphabet position.
class WordPair {
 public:
  WordPair() = default;
  WordPair(std::vector<Symbol> input, std::vector<Symbol> output)
      : input_(std::move(input)), output_(std::move(output)) {
    if (input_.size() != output_.size())
      throw Error(ErrorCode::length_mismatch,
                  "word pair needs |u| = |v|, got " + std::to_string(input_.size()) +
                      " and " + std::to_string(output_.size()));
  }

  const std::vector<Symbol>& input() const noexcept { return input_; }
  const std::vector<Symbol>& output() const noexcept { return output_; }
  std::size_t size() const noexcept { return input_.size(); }
  bool empty() const noexcept { return input_.empty(); }

  friend bool operator==(const WordPair&, const WordPair&) = default;

 private:
  std::vector<Symbol> input_;
  std::vector<Symbol> output_;
};

/// Resolves symbol names; throws unknown_symbol or length_mismatch.
WordPair make_word_pair(const Alphabet& inputs, const Alphabet& outputs,
                        const std::vector<std::string>& u, const std::vector<std::string>& v);

/// Comma-joined symbol names, e.g. "0,1,0"; the empty word prints as "".
std::string format_word(const Alphabet& alphabet, const std::vector<Symbol>& word);

// (A, X, Y, sigma, mu). The family mu_{x,y} is stored densely over X x Y
// at position x * |Y| + y.
template <Semiring S>
struct SequentialWfa {
  static constexpr AutomatonKind kind = AutomatonKind::sequential;
  using semiring_type = S;

  StateSet states;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  SrVector<S> initial;
  std::vector<SrMatrix<S>> transitions;

  SequentialWfa(StateSet a, Alphabet x, Alphabet y)
      : states(std::move(a)),
        input_alphabet(std::move(x)),
        output_alphabet(std::move(y)),
        initial(states),
        transitions(input_alphabet.size() * output_alphabet.size(), SrMatrix<S>(states)) {}

  SrMatrix<S>& mu(Symbol x, Symbol y) { return transitions.at(x * output_alphabet.size() + y); }
  const SrMatrix<S>& mu(Symbol x, Symbol y) const {
    return transitions.at(x * output_alphabet.size() + y);
  }
  std::size_t size() const { return states->size(); }

  friend bool operator==(const SequentialWfa& a, const SequentialWfa& b) {
    return same_states(a.states, b.states) && a.input_alphabet == b.input_alphabet &&
           a.output_alphabet == b.output_alphabet && a.initial == b.initial &&
           a.transitions == b.transitions;
  }
};

// (A, X, Y, sigma, delta, omega) with omega: A x X x Y -> S, stored at x * |Y| + y.
template <Semiring S>
struct MealyWfa {
  static constexpr AutomatonKind kind = AutomatonKind::mealy;
  using semiring_type = S;

  StateSet states;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  SrVector<S> initial;
  std::vector<SrMatrix<S>> transitions;
  std::vector<SrVector<S>> output_weights;

  MealyWfa(StateSet a, Alphabet x, Alphabet y)
      : states(std::move(a)),
        input_alphabet(std::move(x)),
        output_alphabet(std::move(y)),
        initial(states),
        transitions(input_alphabet.size(), SrMatrix<S>(states)),
        output_weights(input_alphabet.size() * output_alphabet.size(), SrVector<S>(states)) {}

  SrMatrix<S>& delta(Symbol x) { return transitions.at(x); }
  const SrMatrix<S>& delta(Symbol x) const { return transitions.at(x); }
  SrVector<S>& omega(Symbol x, Symbol y) {
    return output_weights.at(x * output_alphabet.size() + y);
  }
  const SrVector<S>& omega(Symbol x, Symbol y) const {
    return output_weights.at(x * output_alphabet.size() + y);
  }
  std::size_t size() const { return states->size(); }

  friend bool operator==(const MealyWfa& a, const MealyWfa& b) {
    return same_states(a.states, b.states) && a.input_alphabet == b.input_alphabet &&
           a.output_alphabet == b.output_alphabet && a.initial == b.initial &&
           a.transitions == b.transitions && a.output_weights == b.output_weights;
  }
};

// (A, X, Y, sigma, delta, omega) with omega: A x Y -> S.
template <Semiring S>
struct MooreWfa {
  static constexpr AutomatonKind kind = AutomatonKind::moore;
  using semiring_type = S;

  StateSet states;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  SrVector<S> initial;
  std::vector<SrMatrix<S>> transitions;
  std::vector<SrVector<S>> output_weights;

  MooreWfa(StateSet a, Alphabet x, Alphabet y)
      : states(std::move(a)),
        input_alphabet(std::move(x)),
        output_alphabet(std::move(y)),
        initial(states),
        transitions(input_alphabet.size(), SrMatrix<S>(states)),
        output_weights(output_alphabet.size(), SrVector<S>(states)) {}

  SrMatrix<S>& delta(Symbol x) { return transitions.at(x); }
  const SrMatrix<S>& delta(Symbol x) const { return transitions.at(x); }
  SrVector<S>& omega(Symbol y) { return output_weights.at(y); }
  const SrVector<S>& omega(Symbol y) const { return output_weights.at(y); }
  std::size_t size() const { return states->size(); }

  friend bool operator==(const MooreWfa& a, const MooreWfa& b) {
    return same_states(a.states, b.states) && a.input_alphabet == b.input_alphabet &&
           a.output_alphabet == b.output_alphabet && a.initial == b.initial &&
           a.transitions == b.transitions && a.output_weights == b.output_weights;
  }
};

// Functional form (A, X, Y, a0, delta: A x X -> A, omega). Transition
// targets are stored at a * |X| + x.
template <Semiring S>
struct CrispMealy {
  static constexpr AutomatonKind kind = AutomatonKind::cd_mealy;
  using semiring_type = S;

  StateSet states;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::size_t initial_state = 0;
  std::vector<std::size_t> next;
  std::vector<SrVector<S>> output_weights;

  CrispMealy(StateSet a, Alphabet x, Alphabet y)
      : states(std::move(a)),
        input_alphabet(std::move(x)),
        output_alphabet(std::move(y)),
        next(states->size() * input_alphabet.size(), 0),
        output_weights(input_alphabet.size() * output_alphabet.size(), SrVector<S>(states)) {}

  std::size_t& target(std::size_t a, Symbol x) { return next.at(a * input_alphabet.size() + x); }
  std::size_t target(std::size_t a, Symbol x) const {
    return next.at(a * input_alphabet.size() + x);
  }
  SrVector<S>& omega(Symbol x, Symbol y) {
    return output_weights.at(x * output_alphabet.size() + y);
  }
  const SrVector<S>& omega(Symbol x, Symbol y) const {
    return output_weights.at(x * output_alphabet.size() + y);
  }
  std::size_t size() const { return states->size(); }

  friend bool operator==(const CrispMealy& a, const CrispMealy& b) {
    return same_states(a.states, b.states) && a.input_alphabet == b.input_alphabet &&
           a.output_alphabet == b.output_alphabet && a.initial_state == b.initial_state &&
           a.next == b.next && a.output_weights == b.output_weights;
  }
};

template <Semiring S>
struct CrispMoore {
  static constexpr AutomatonKind kind = AutomatonKind::cd_moore;
  using semiring_type = S;

  StateSet states;
  Alphabet input_alphabet;
  Alphabet output_alphabet;
  std::size_t initial_state = 0;
  std::vector<std::size_t> next;
  std::vector<SrVector<S>> output_weights;

  CrispMoore(StateSet a, Alphabet x, Alphabet y)
      : states(std::move(a)),
        input_alphabet(std::move(x)),
        output_alphabet(std::move(y)),
        next(states->size() * input_alphabet.size(), 0),
        output_weights(output_alphabet.size(), SrVector<S>(states)) {}

  std::size_t& target(std::size_t a, Symbol x) { return next.at(a * input_alphabet.size() + x); }
  std::size_t target(std::size_t a, Symbol x) const {
    return next.at(a * input_alphabet.size() + x);
  }
  SrVector<S>& omega(Symbol y) { return output_weights.at(y); }
  const SrVector<S>& omega(Symbol y) const { return output_weights.at(y); }
  std::size_t size() const { return states->size(); }

  friend bool operator==(const CrispMoore& a, const CrispMoore& b) {
    return same_states(a.states, b.states) && a.input_alphabet == b.input_alphabet &&
           a.output_alphabet == b.output_alphabet && a.initial_state == b.initial_state &&
           a.next == b.next && a.output_weights == b.output_weights;
  }
};

// ---------------------------------------------------------------------------
// Validation

enum class ViolationKind {
  empty_states,
  empty_input_alphabet,
  empty_output_alphabet,
  family_size,
  index_mismatch,
  carrier,
  initial_state,
  transition_target,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

namespace detail {

template <class A>
void check_sets(const A& a, std::vector<Violation>& out) {
  if (!a.states || a.states->empty())
    out.push_back({ViolationKind::empty_states, "state set is empty"});
  if (a.input_alphabet.empty())
    out.push_back({ViolationKind::empty_input_alphabet, "input alphabet is empty"});
  if (a.output_alphabet.empty())
    out.push_back({ViolationKind::empty_output_alphabet, "output alphabet is empty"});
}

template <Semiring S>
void check_vector(const SrVector<S>& v, const StateSet& states, const std::string& what,
                  std::vector<Violation>& out) {
  if (!same_states(v.states(), states)) {
    out.push_back({ViolationKind::index_mismatch, what + " is not indexed by the state set"});
    return;
  }
  for (const auto& [a, x] : v.entries()) {
    if (!S::in_carrier(x))
      out.push_back({ViolationKind::carrier, what + "(" + states->name(a) + ") = " +
                                                 S::format(x) + " lies outside " +
                                                 std::string(S::carrier)});
  }
}

template <Semiring S>
void check_matrix(const SrMatrix<S>& m, const StateSet& states, const std::string& what,
                  std::vector<Violation>& out) {
  if (!same_states(m.states(), states)) {
    out.push_back({ViolationKind::index_mismatch, what + " is not indexed by the state set"});
    return;
  }
  for (std::size_t a = 0; a < m.size(); ++a)
    for (const auto& [b, x] : m.row(a))
      if (!S::in_carrier(x))
        out.push_back({ViolationKind::carrier, what + "(" + states->name(a) + "," +
                                                   states->name(b) + ") = " + S::format(x) +
                                                   " lies outside " + std::string(S::carrier)});
}

inline void check_family_size(std::size_t got, std::size_t want, const char* what,
                              std::vector<Violation>& out) {
  if (got != want)
    out.push_back({ViolationKind::family_size, std::string(what) + " family has " +
                                                   std::to_string(got) + " members, expected " +
                                                   std::to_string(want)});
}

template <class A>
void check_crisp_transitions(const A& a, std::vector<Violation>& out) {
  const std::size_t n = a.states ? a.states->size() : 0;
  if (a.initial_state >= n)
    out.push_back({ViolationKind::initial_state, "initial state is not a state"});
  check_family_size(a.next.size(), n * a.input_alphabet.size(), "transition", out);
  for (std::size_t i = 0; i < a.next.size(); ++i)
    if (a.next[i] >= n)
      out.push_back({ViolationKind::transition_target,
                     "transition " + std::to_string(i) + " targets a non-state"});
}

}  // namespace detail

/// Empty iff every structural invariant holds and every weight lies in the
/// carrier. Violations are data; nothing here throws.
template <Semiring S>
std::vector<Violation> validate(const SequentialWfa<S>& a) {
  std::vector<Violation> out;
  detail::check_sets(a, out);
  if (!a.states) return out;
  detail::check_vector(a.initial, a.states, "initial", out);
  detail::check_family_size(a.transitions.size(),
                            a.input_alphabet.size() * a.output_alphabet.size(), "mu", out);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    detail::check_matrix(a.transitions[i], a.states, "mu[" + std::to_string(i) + "]", out);
  return out;
}

template <Semiring S>
std::vector<Violation> validate(const MealyWfa<S>& a) {
  std::vector<Violation> out;
  detail::check_sets(a, out);
  if (!a.states) return out;
  detail::check_vector(a.initial, a.states, "initial", out);
  detail::check_family_size(a.transitions.size(), a.input_alphabet.size(), "delta", out);
  detail::check_family_size(a.output_weights.size(),
                            a.input_alphabet.size() * a.output_alphabet.size(), "omega", out);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    detail::check_matrix(a.transitions[i], a.states, "delta[" + std::to_string(i) + "]", out);
  for (std::size_t i = 0; i < a.output_weights.size(); ++i)
    detail::check_vector(a.output_weights[i], a.states, "omega[" + std::to_string(i) + "]", out);
  return out;
}

template <Semiring S>
std::vector<Violation> validate(const MooreWfa<S>& a) {
  std::vector<Violation> out;
  detail::check_sets(a, out);
  if (!a.states) return out;
  detail::check_vector(a.initial, a.states, "initial", out);
  detail::check_family_size(a.transitions.size(), a.input_alphabet.size(), "delta", out);
  detail::check_family_size(a.output_weights.size(), a.output_alphabet.size(), "omega", out);
  for (std::size_t i = 0; i < a.transitions.size(); ++i)
    detail::check_matrix(a.transitions[i], a.states, "delta[" + std::to_string(i) + "]", out);
  for (std::size_t i = 0; i < a.output_weights.size(); ++i)
    detail::check_vector(a.output_weights[i], a.states, "omega[" + std::to_string(i) + "]", out);
  return out;
}

template <Semiring S>
std::vector<Violation> validate(const CrispMealy<S>& a) {
  std::vector<Violation> out;
  detail::check_sets(a, out);
  if (!a.states) return out;
  detail::check_crisp_transitions(a, out);
  detail::check_family_size(a.output_weights.size(),
                            a.input_alphabet.size() * a.output_alphabet.size(), "omega", out);
  for (std::size_t i = 0; i < a.output_weights.size(); ++i)
    detail::check_vector(a.output_weights[i], a.states, "omega[" + std::to_string(i) + "]", out);
  return out;
}

template <Semiring S>
std::vector<Violation> validate(const CrispMoore<S>& a) {
  std::vector<Violation> out;
  detail::check_sets(a, out);
  if (!a.states) return out;
  detail::check_crisp_transitions(a, out);
  detail::check_family_size(a.output_weights.size(), a.output_alphabet.size(), "omega", out);
  for (std::size_t i = 0; i < a.output_weights.size(); ++i)
    detail::check_vector(a.output_weights[i], a.states, "omega[" + std::to_string(i) + "]", out);
  return out;
}

std::string describe(const std::vector<Violation>& violations);

/// Throws validation_failed listing every violation.
template <class A>
void require_valid(const A& a) {
  auto violations = validate(a);
  if (!violations.empty())
    throw Error(ErrorCode::validation_failed, "invalid automaton: " + describe(violations));
}

// ---------------------------------------------------------------------------
// Crisp-determinism

namespace detail {

// A crisp row: exactly one entry equal to one, everything else zero, both
// under elem_eq.
template <Semiring S>
std::optional<std::size_t> crisp_position(const std::map<std::size_t, typename S::value_type>& row) {
  std::optional<std::size_t> pos;
  for (const auto& [i, value] : row) {
    if (S::equal(value, S::one())) {
      if (pos) return std::nullopt;
      pos = i;
    } else if (!S::equal(value, S::zero())) {
      return std::nullopt;
    }
  }
  return pos;
}

template <Semiring S>
bool crisp_matrix_form(const SrVector<S>& initial, const std::vector<SrMatrix<S>>& delta) {
  if (!crisp_position<S>(initial.entries())) return false;
  for (const auto& m : delta)
    for (std::size_t a = 0; a < m.size(); ++a)
      if (!crisp_position<S>(m.row(a))) return false;
  return true;
}

}  // namespace detail

template <Semiring S>
bool check_crisp_deterministic(const MealyWfa<S>& m) {
  return detail::crisp_matrix_form<S>(m.initial, m.transitions);
}

template <Semiring S>
bool check_crisp_deterministic(const MooreWfa<S>& m) {
  return detail::crisp_matrix_form<S>(m.initial, m.transitions);
}

namespace detail {

template <Semiring S, class Matrix, class Crisp>
void read_crisp_structure(const Matrix& m, Crisp& out) {
  out.initial_state = *crisp_position<S>(m.initial.entries());
  for (std::size_t x = 0; x < m.input_alphabet.size(); ++x)
    for (std::size_t a = 0; a < m.size(); ++a)
      out.target(a, x) = *crisp_position<S>(m.delta(x).row(a));
}

template <Semiring S, class Crisp, class Matrix>
void write_crisp_structure(const Crisp& c, Matrix& out) {
  out.initial.set(c.initial_state, S::one());
  for (std::size_t x = 0; x < c.input_alphabet.size(); ++x)
    for (std::size_t a = 0; a < c.size(); ++a) out.delta(x).set(a, c.target(a, x), S::one());
}

}  // namespace detail

/// Functional form of a crisp-deterministic Mealy automaton; throws not_crisp.
template <Semiring S>
CrispMealy<S> promote_to_crisp(const MealyWfa<S>& m) {
  if (!check_crisp_deterministic(m))
    throw Error(ErrorCode::not_crisp,
                "automaton is not crisp-deterministic (initial vector or a transition row "
                "is not a 0/1 unit vector)");
  CrispMealy<S> out(m.states, m.input_alphabet, m.output_alphabet);
  detail::read_crisp_structure<S>(m, out);
  out.output_weights = m.output_weights;
  return out;
}

template <Semiring S>
CrispMoore<S> promote_to_crisp(const MooreWfa<S>& m) {
  if (!check_crisp_deterministic(m))
    throw Error(ErrorCode::not_crisp,
                "automaton is not crisp-deterministic (initial vector or a transition row "
                "is not a 0/1 unit vector)");
  CrispMoore<S> out(m.states, m.input_alphabet, m.output_alphabet);
  detail::read_crisp_structure<S>(m, out);
  out.output_weights = m.output_weights;
  return out;
}

/// Matrix form: sigma and every delta_x row become 0/1 unit vectors.
template <Semiring S>
MealyWfa<S> to_matrix_form(const CrispMealy<S>& c) {
  MealyWfa<S> out(c.states, c.input_alphabet, c.output_alphabet);
  detail::write_crisp_structure<S>(c, out);
  out.output_weights = c.output_weights;
  return out;
}

template <Semiring S>
MooreWfa<S> to_matrix_form(const CrispMoore<S>& c) {
  MooreWfa<S> out(c.states, c.input_alphabet, c.output_alphabet);
  detail::write_crisp_structure<S>(c, out);
  out.output_weights = c.output_weights;
  return out;
}

}  // namespace wfa

#endif  // WFA_AUTOMATA_HPP
