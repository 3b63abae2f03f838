#ifndef WFA_SEMANTICS_HPP
#define WFA_SEMANTICS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "wfa/automata.hpp"
#include "wfa/sralgebra.hpp"

namespace wfa {

// seq: sequential automata. one_n / n_one / s: Mealy automata (Moore ones
// take one_n and n_one). cd: crisp-deterministic automata in functional form.
enum class Semantics { seq, one_n, n_one, s, cd };

std::string_view to_string(Semantics tag);  // "seq", "1n", "n1", "s", "cd"
Semantics semantics_from_name(std::string_view name);  // throws unknown_name

/// Crisp kinds accept cd plus every semantics of their matrix-form family.
bool compatible(AutomatonKind kind, Semantics tag);
void require_compatible(AutomatonKind kind, Semantics tag);

namespace detail {

inline void check_symbols(const Alphabet& alphabet, const std::vector<Symbol>& word,
                          const char* which) {
  for (Symbol s : word)
    if (s >= alphabet.size())
      throw Error(ErrorCode::unknown_symbol, std::string("unknown ") + which + " symbol #" +
                                                 std::to_string(s));
}

template <class A>
void check_word(const A& a, const WordPair& w) {
  check_symbols(a.input_alphabet, w.input(), "input");
  check_symbols(a.output_alphabet, w.output(), "output");
}

}  // namespace detail

/// mu_{u,v} = mu_{x1,y1} ... mu_{xn,yn}; the identity for the empty pair.
template <Semiring S>
SrMatrix<S> mu_word(const SequentialWfa<S>& a, const WordPair& w) {
  detail::check_word(a, w);
  SrMatrix<S> m = identity_matrix<S>(a.states);
  for (std::size_t i = 0; i < w.size(); ++i) m = mat_mul(m, a.mu(w.input()[i], w.output()[i]));
  return m;
}

/// delta_u = delta_{x1} ... delta_{xn}; the identity for the empty word.
template <class A>
auto delta_word(const A& a, const std::vector<Symbol>& u) {
  using S = typename A::semiring_type;
  detail::check_symbols(a.input_alphabet, u, "input");
  SrMatrix<S> m = identity_matrix<S>(a.states);
  for (Symbol x : u) m = mat_mul(m, a.delta(x));
  return m;
}

// ---------------------------------------------------------------------------
// Output vectors omega_{u,v} (Mealy and Moore, 1n and n1). For the empty pair
// this is the all-ones vector.

template <Semiring S>
SrVector<S> omega_word(const MealyWfa<S>& a, Semantics tag, const WordPair& w) {
  if (tag != Semantics::one_n && tag != Semantics::n_one)
    throw Error(ErrorCode::incompatible_semantics, "omega_word needs 1n or n1");
  detail::check_word(a, w);
  const std::size_t n = w.size();
  if (n == 0) return all_ones<S>(a.states);
  const auto& u = w.input();
  const auto& v = w.output();

  if (tag == Semantics::one_n) {
    // omega_{xu,yv} = D(omega_{x,y}) . delta_x . omega_{u,v}, from the right.
    SrVector<S> suffix = a.omega(u[n - 1], v[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
      suffix = hadamard(a.omega(u[i], v[i]), mat_vec(a.delta(u[i]), suffix));
    return suffix;
  }

  // omega_{ux,vy} = D(omega_{u,v}) . delta_u . omega_{x,y}, from the left,
  // carrying delta of the prefix read so far.
  SrVector<S> acc = a.omega(u[0], v[0]);
  SrMatrix<S> prefix = a.delta(u[0]);
  for (std::size_t i = 1; i < n; ++i) {
    acc = hadamard(acc, mat_vec(prefix, a.omega(u[i], v[i])));
    if (i + 1 < n) prefix = mat_mul(prefix, a.delta(u[i]));
  }
  return acc;
}

template <Semiring S>
SrVector<S> omega_word(const MooreWfa<S>& a, Semantics tag, const WordPair& w) {
  if (tag != Semantics::one_n && tag != Semantics::n_one)
    throw Error(ErrorCode::incompatible_semantics, "omega_word needs 1n or n1");
  detail::check_word(a, w);
  const std::size_t n = w.size();
  if (n == 0) return all_ones<S>(a.states);
  const auto& u = w.input();
  const auto& v = w.output();

  if (tag == Semantics::one_n) {
    // omega_{xu,yv} = delta_x . D(omega_y) . omega_{u,v}; base delta_x . omega_y.
    SrVector<S> suffix = mat_vec(a.delta(u[n - 1]), a.omega(v[n - 1]));
    for (std::size_t i = n - 1; i-- > 0;)
      suffix = mat_vec(a.delta(u[i]), hadamard(a.omega(v[i]), suffix));
    return suffix;
  }

  SrMatrix<S> prefix = a.delta(u[0]);
  SrVector<S> acc = mat_vec(prefix, a.omega(v[0]));
  for (std::size_t i = 1; i < n; ++i) {
    prefix = mat_mul(prefix, a.delta(u[i]));
    acc = hadamard(acc, mat_vec(prefix, a.omega(v[i])));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Behaviors, matrix form.

template <Semiring S>
typename S::value_type behavior(const SequentialWfa<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::sequential, tag);
  detail::check_word(a, w);
  // sigma . mu_{u,v} . tau, left to right.
  SrVector<S> row = a.initial;
  for (std::size_t i = 0; i < w.size(); ++i)
    row = vec_mat(row, a.mu(w.input()[i], w.output()[i]));
  return sum_entries(row);
}

template <Semiring S>
typename S::value_type behavior(const MealyWfa<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::mealy, tag);
  detail::check_word(a, w);
  if (tag == Semantics::s) {
    // sigma . D(omega_{x1,y1}) delta_{x1} ... D(omega_{xn,yn}) delta_{xn} . tau
    SrVector<S> row = a.initial;
    for (std::size_t i = 0; i < w.size(); ++i)
      row = vec_mat(hadamard(row, a.omega(w.input()[i], w.output()[i])),
                    a.delta(w.input()[i]));
    return sum_entries(row);
  }
  if (w.empty()) return sum_entries(a.initial);
  return dot(a.initial, omega_word(a, tag, w));
}

template <Semiring S>
typename S::value_type behavior(const MooreWfa<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::moore, tag);
  detail::check_word(a, w);
  if (w.empty()) return sum_entries(a.initial);
  if (tag == Semantics::one_n) {
    SrVector<S> row = a.initial;
    for (std::size_t i = 0; i < w.size(); ++i)
      row = hadamard(vec_mat(row, a.delta(w.input()[i])), a.omega(w.output()[i]));
    return sum_entries(row);
  }
  return dot(a.initial, omega_word(a, tag, w));
}

template <Semiring S>
typename S::value_type behavior(const CrispMealy<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::cd_mealy, tag);
  if (tag != Semantics::cd) return behavior(to_matrix_form(a), tag, w);
  detail::check_word(a, w);
  // omega_{x1,y1}(a0) . omega_{x2,y2}(delta_{x1}(a0)) ... along the unique run.
  std::size_t state = a.initial_state;
  typename S::value_type product = S::one();
  for (std::size_t i = 0; i < w.size(); ++i) {
    product = S::mul(product, a.omega(w.input()[i], w.output()[i]).at(state));
    state = a.target(state, w.input()[i]);
  }
  return product;
}

template <Semiring S>
typename S::value_type behavior(const CrispMoore<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::cd_moore, tag);
  if (tag != Semantics::cd) return behavior(to_matrix_form(a), tag, w);
  detail::check_word(a, w);
  std::size_t state = a.initial_state;
  typename S::value_type product = S::one();
  for (std::size_t i = 0; i < w.size(); ++i) {
    state = a.target(state, w.input()[i]);
    product = S::mul(product, a.omega(w.output()[i]).at(state));
  }
  return product;
}

}  // namespace wfa

#endif  // WFA_SEMANTICS_HPP
