#ifndef WFA_SEMANTICS_ORACLE_HPP
#define WFA_SEMANTICS_ORACLE_HPP

// Definitional path-sum evaluation of every behavior: explicit summation over
// state tuples, one product per tuple, exactly as the expanded sums are
// written. Shares no code with the matrix-form evaluators in semantics.hpp
// beyond entry lookup, so the two can check each other.

#include <cstdint>
#include <vector>

#include "wfa/automata.hpp"
#include "wfa/semantics.hpp"

namespace wfa {

inline constexpr std::uint64_t kOracleTupleLimit = 10'000'000;

namespace oracle_detail {

inline void require_enumerable(std::size_t states, std::size_t word_length) {
  std::uint64_t count = 1;
  bool over = false;
  for (std::size_t i = 0; i <= word_length && !over && states > 0; ++i) {
    if (count > kOracleTupleLimit / states)
      over = true;
    else
      count *= states;
  }
  if (over)
    throw Error(ErrorCode::enumeration_limit,
                "path-sum enumeration needs |A|^(|u|+1) = " + std::to_string(states) + "^" +
                    std::to_string(word_length + 1) + " tuples, above the limit of " +
                    std::to_string(kOracleTupleLimit));
}

// Sum over (a_0, ..., a_len) of first(a_0) * prod_{i=1..len} factor(i, t),
// where t holds a_0..a_i when factor is called. Tuples whose running
// product is already zero are skipped: 0 annihilates and is the additive
// identity, so they contribute nothing.
template <Semiring S, class First, class Factor>
typename S::value_type tuple_sum(std::size_t states, std::size_t len, First first, Factor factor) {
  using V = typename S::value_type;
  V total = S::zero();
  std::vector<std::size_t> tuple(len + 1, 0);
  auto extend = [&](auto& self, std::size_t i, const V& acc) -> void {
    if (i > len) {
      total = S::add(total, acc);
      return;
    }
    for (std::size_t b = 0; b < states; ++b) {
      tuple[i] = b;
      V next = S::mul(acc, factor(i, tuple));
      if (is_zero<S>(next)) continue;
      self(self, i + 1, next);
    }
  };
  for (std::size_t a0 = 0; a0 < states; ++a0) {
    tuple[0] = a0;
    V start = first(a0);
    if (is_zero<S>(start)) continue;
    extend(extend, 1, start);
  }
  return total;
}

// table[j][a][b] = delta_{x_1..x_j}(a, b) for j = 1..n, each entry an
// explicit sum over intermediate state tuples.
template <Semiring S, class A>
std::vector<std::vector<std::vector<typename S::value_type>>> prefix_transition_sums(
    const A& a, const std::vector<Symbol>& u) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::vector<typename S::value_type>>> table(u.size() + 1);
  for (std::size_t j = 1; j <= u.size(); ++j) {
    table[j].assign(n, std::vector<typename S::value_type>(n, S::zero()));
    for (std::size_t from = 0; from < n; ++from) {
      for (std::size_t to = 0; to < n; ++to) {
        // Sum over (c_0 = from, c_1, ..., c_j = to).
        table[j][from][to] = tuple_sum<S>(
            n, j, [&](std::size_t c0) { return c0 == from ? S::one() : S::zero(); },
            [&](std::size_t i, const std::vector<std::size_t>& t) {
              if (i == j && t[i] != to) return S::zero();
              return a.delta(u[i - 1]).at(t[i - 1], t[i]);
            });
      }
    }
  }
  return table;
}

template <Semiring S>
typename S::value_type sum_initial(const SrVector<S>& sigma) {
  typename S::value_type total = S::zero();
  for (std::size_t a = 0; a < sigma.size(); ++a) total = S::add(total, sigma.at(a));
  return total;
}

}  // namespace oracle_detail

// sum over (a, a_1..a_n) of sigma(a) mu_{x1,y1}(a,a_1) ... mu_{xn,yn}(a_{n-1},a_n)
template <Semiring S>
typename S::value_type behavior_oracle(const SequentialWfa<S>& a, Semantics tag,
                                       const WordPair& w) {
  require_compatible(AutomatonKind::sequential, tag);
  detail::check_word(a, w);
  oracle_detail::require_enumerable(a.size(), w.size());
  if (w.empty()) return oracle_detail::sum_initial(a.initial);
  const auto& u = w.input();
  const auto& v = w.output();
  return oracle_detail::tuple_sum<S>(
      a.size(), w.size(), [&](std::size_t a0) { return a.initial.at(a0); },
      [&](std::size_t i, const std::vector<std::size_t>& t) {
        return a.mu(u[i - 1], v[i - 1]).at(t[i - 1], t[i]);
      });
}

template <Semiring S>
typename S::value_type behavior_oracle(const MealyWfa<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::mealy, tag);
  detail::check_word(a, w);
  oracle_detail::require_enumerable(a.size(), w.size());
  if (w.empty()) return oracle_detail::sum_initial(a.initial);
  const auto& u = w.input();
  const auto& v = w.output();
  const std::size_t n = w.size();
  auto first = [&](std::size_t a0) {
    return S::mul(a.initial.at(a0), a.omega(u[0], v[0]).at(a0));
  };

  switch (tag) {
    case Semantics::one_n:
      // sigma(a) omega_{x1,y1}(a) delta_{x1}(a,a_1) omega_{x2,y2}(a_1) ...
      //   delta_{x_{n-1}}(a_{n-2},a_{n-1}) omega_{xn,yn}(a_{n-1})
      return oracle_detail::tuple_sum<S>(
          a.size(), n - 1, first, [&](std::size_t i, const std::vector<std::size_t>& t) {
            return S::mul(a.delta(u[i - 1]).at(t[i - 1], t[i]), a.omega(u[i], v[i]).at(t[i]));
          });
    case Semantics::n_one: {
      // sigma(a) omega_{x1,y1}(a) delta_{x1}(a,a_1) omega_{x2,y2}(a_1)
      //   delta_{x1x2}(a,a_2) omega_{x3,y3}(a_2) ... delta_{x1..x_{n-1}}(a,a_{n-1}) omega_{xn,yn}(a_{n-1})
      auto prefix = oracle_detail::prefix_transition_sums<S>(a, u);
      return oracle_detail::tuple_sum<S>(
          a.size(), n - 1, first, [&](std::size_t i, const std::vector<std::size_t>& t) {
            return S::mul(prefix[i][t[0]][t[i]], a.omega(u[i], v[i]).at(t[i]));
          });
    }
    case Semantics::s:
      // sigma(a) omega_{x1,y1}(a) delta_{x1}(a,a_1) ... omega_{xn,yn}(a_{n-1}) delta_{xn}(a_{n-1},a_n)
      return oracle_detail::tuple_sum<S>(
          a.size(), n, [&](std::size_t a0) { return a.initial.at(a0); },
          [&](std::size_t i, const std::vector<std::size_t>& t) {
            return S::mul(a.omega(u[i - 1], v[i - 1]).at(t[i - 1]),
                          a.delta(u[i - 1]).at(t[i - 1], t[i]));
          });
    default: break;
  }
  throw Error(ErrorCode::incompatible_semantics, "unreachable Mealy semantics");
}

template <Semiring S>
typename S::value_type behavior_oracle(const MooreWfa<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::moore, tag);
  detail::check_word(a, w);
  oracle_detail::require_enumerable(a.size(), w.size());
  if (w.empty()) return oracle_detail::sum_initial(a.initial);
  const auto& u = w.input();
  const auto& v = w.output();
  auto first = [&](std::size_t a0) { return a.initial.at(a0); };

  if (tag == Semantics::one_n) {
    // sigma(a) delta_{x1}(a,a_1) omega_{y1}(a_1) ... delta_{xn}(a_{n-1},a_n) omega_{yn}(a_n)
    return oracle_detail::tuple_sum<S>(
        a.size(), w.size(), first, [&](std::size_t i, const std::vector<std::size_t>& t) {
          return S::mul(a.delta(u[i - 1]).at(t[i - 1], t[i]), a.omega(v[i - 1]).at(t[i]));
        });
  }
  // sigma(a) delta_{x1}(a,a_1) omega_{y1}(a_1) delta_{x1x2}(a,a_2) omega_{y2}(a_2) ...
  //   delta_{x1..xn}(a,a_n) omega_{yn}(a_n)
  auto prefix = oracle_detail::prefix_transition_sums<S>(a, u);
  return oracle_detail::tuple_sum<S>(
      a.size(), w.size(), first, [&](std::size_t i, const std::vector<std::size_t>& t) {
        return S::mul(prefix[i][t[0]][t[i]], a.omega(v[i - 1]).at(t[i]));
      });
}

// Crisp kinds: cd sums over all tuples with 0/1 indicators for the initial
// state and each transition; other tags go through the matrix form.
template <Semiring S>
typename S::value_type behavior_oracle(const CrispMealy<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::cd_mealy, tag);
  if (tag != Semantics::cd) return behavior_oracle(to_matrix_form(a), tag, w);
  detail::check_word(a, w);
  oracle_detail::require_enumerable(a.size(), w.size());
  const auto& u = w.input();
  const auto& v = w.output();
  return oracle_detail::tuple_sum<S>(
      a.size(), w.size(),
      [&](std::size_t a0) { return a0 == a.initial_state ? S::one() : S::zero(); },
      [&](std::size_t i, const std::vector<std::size_t>& t) {
        if (a.target(t[i - 1], u[i - 1]) != t[i]) return S::zero();
        return a.omega(u[i - 1], v[i - 1]).at(t[i - 1]);
      });
}

template <Semiring S>
typename S::value_type behavior_oracle(const CrispMoore<S>& a, Semantics tag, const WordPair& w) {
  require_compatible(AutomatonKind::cd_moore, tag);
  if (tag != Semantics::cd) return behavior_oracle(to_matrix_form(a), tag, w);
  detail::check_word(a, w);
  oracle_detail::require_enumerable(a.size(), w.size());
  const auto& u = w.input();
  const auto& v = w.output();
  return oracle_detail::tuple_sum<S>(
      a.size(), w.size(),
      [&](std::size_t a0) { return a0 == a.initial_state ? S::one() : S::zero(); },
      [&](std::size_t i, const std::vector<std::size_t>& t) {
        if (a.target(t[i - 1], u[i - 1]) != t[i]) return S::zero();
        return a.omega(v[i - 1]).at(t[i]);
      });
}

}  // namespace wfa

#endif  // WFA_SEMANTICS_ORACLE_HPP
