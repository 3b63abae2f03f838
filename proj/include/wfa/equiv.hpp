#ifndef WFA_EQUIV_HPP
#define WFA_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfa/any_automaton.hpp"
#include "wfa/automata.hpp"
#include "wfa/semantics.hpp"

namespace wfa {

inline constexpr std::size_t kDefaultMaxLen = 4;
inline constexpr std::uint64_t kWordPairLimit = 1'000'000;

/// sum_{n=0..max_len} (nx * ny)^n, saturating at UINT64_MAX.
std::uint64_t count_word_pairs(std::size_t nx, std::size_t ny, std::size_t max_len);

/// Word pairs with |u| = |v| <= max_len, by length, then u, then v, each
/// compared lexicographically in declared symbol order.
class WordPairEnumerator {
 public:
  WordPairEnumerator(std::size_t nx, std::size_t ny, std::size_t max_len);

  /// Writes the next pair and returns true, or returns false when exhausted.
  bool next(WordPair& out);

 private:
  bool advance();

  std::size_t nx_, ny_, max_len_;
  std::size_t len_ = 0;
  std::vector<Symbol> u_, v_;
  bool started_ = false;
  bool done_ = false;
};

/// Throws enumeration_limit above kWordPairLimit pairs.
std::vector<WordPair> enumerate_word_pairs(const Alphabet& inputs, const Alphabet& outputs,
                                           std::size_t max_len);

template <class V>
struct Divergence {
  WordPair pair;
  V value1;
  V value2;
};

template <class V>
struct EquivVerdict {
  bool equal = true;
  std::size_t max_len = 0;
  std::optional<Divergence<V>> first_divergence;
  std::uint64_t failures = 0;
  std::uint64_t checked = 0;
};

namespace detail {

// Position of each symbol of `from` inside `to`, matched by name.
std::vector<Symbol> alphabet_remap(const Alphabet& from, const Alphabet& to, const char* which);

}  // namespace detail

/// Compares behavior(a1, tag1, w) and behavior(a2, tag2, w) under elem_eq
/// for every w up to max_len. Alphabets must hold the same names; the
/// enumeration follows a1's declaration order.
template <class A1, class A2>
EquivVerdict<typename A1::semiring_type::value_type> check_equiv(const A1& a1, Semantics tag1,
                                                                 const A2& a2, Semantics tag2,
                                                                 std::size_t max_len = kDefaultMaxLen) {
  using S = typename A1::semiring_type;
  static_assert(std::is_same_v<S, typename A2::semiring_type>,
                "check_equiv needs automata over the same semiring");
  require_compatible(A1::kind, tag1);
  require_compatible(A2::kind, tag2);
  const auto in_map = detail::alphabet_remap(a1.input_alphabet, a2.input_alphabet, "input");
  const auto out_map = detail::alphabet_remap(a1.output_alphabet, a2.output_alphabet, "output");
  const auto total = count_word_pairs(a1.input_alphabet.size(), a1.output_alphabet.size(), max_len);
  if (total > kWordPairLimit)
    throw Error(ErrorCode::enumeration_limit,
                "equivalence check would visit " + std::to_string(total) +
                    " word pairs, above the limit of " + std::to_string(kWordPairLimit));

  EquivVerdict<typename S::value_type> verdict;
  verdict.max_len = max_len;
  WordPairEnumerator pairs(a1.input_alphabet.size(), a1.output_alphabet.size(), max_len);
  WordPair w;
  std::vector<Symbol> u2, v2;
  while (pairs.next(w)) {
    u2.clear();
    v2.clear();
    for (Symbol x : w.input()) u2.push_back(in_map[x]);
    for (Symbol y : w.output()) v2.push_back(out_map[y]);
    auto value1 = behavior(a1, tag1, w);
    auto value2 = behavior(a2, tag2, WordPair(u2, v2));
    ++verdict.checked;
    if (elem_eq<S>(value1, value2)) continue;
    ++verdict.failures;
    if (!verdict.first_divergence)
      verdict.first_divergence = Divergence<typename S::value_type>{w, value1, value2};
  }
  verdict.equal = verdict.failures == 0;
  return verdict;
}

/// Verdict with values already formatted, for automata read from files.
struct FormattedVerdict {
  bool equal = true;
  std::size_t max_len = 0;
  std::uint64_t failures = 0;
  std::uint64_t checked = 0;
  std::optional<std::string> divergence;  // "u;v: value1 != value2"
};

/// Throws semiring_mismatch when the two automata use different semirings.
FormattedVerdict check_equiv(const AnyAutomaton& a1, Semantics tag1, const AnyAutomaton& a2,
                             Semantics tag2, std::size_t max_len = kDefaultMaxLen);

}  // namespace wfa

#endif  // WFA_EQUIV_HPP
