#include "wfa/equiv.hpp"

#include <limits>

namespace wfa {

std::uint64_t count_word_pairs(std::size_t nx, std::size_t ny, std::size_t max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t k = static_cast<std::uint64_t>(nx) * ny;
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t n = 0; n <= max_len; ++n) {
    if (total > kMax - power) return kMax;
    total += power;
    if (n == max_len) break;
    if (k != 0 && power > kMax / k) return kMax;
    power *= k;
  }
  return total;
}

WordPairEnumerator::WordPairEnumerator(std::size_t nx, std::size_t ny, std::size_t max_len)
    : nx_(nx), ny_(ny), max_len_(max_len) {}

// Odometer over v, then u; the last position moves fastest.
bool WordPairEnumerator::advance() {
  for (std::size_t i = len_; i-- > 0;) {
    if (++v_[i] < ny_) return true;
    v_[i] = 0;
  }
  for (std::size_t i = len_; i-- > 0;) {
    if (++u_[i] < nx_) return true;
    u_[i] = 0;
  }
  if (len_ == max_len_ || nx_ == 0 || ny_ == 0) return false;
  ++len_;
  u_.assign(len_, 0);
  v_.assign(len_, 0);
  return true;
}

bool WordPairEnumerator::next(WordPair& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else if (!advance()) {
    done_ = true;
    return false;
  }
  out = WordPair(u_, v_);
  return true;
}

std::vector<WordPair> enumerate_word_pairs(const Alphabet& inputs, const Alphabet& outputs,
                                           std::size_t max_len) {
  const auto total = count_word_pairs(inputs.size(), outputs.size(), max_len);
  if (total > kWordPairLimit)
    throw Error(ErrorCode::enumeration_limit,
                std::to_string(total) + " word pairs exceed the limit of " +
                    std::to_string(kWordPairLimit));
  std::vector<WordPair> out;
  out.reserve(total);
  WordPairEnumerator e(inputs.size(), outputs.size(), max_len);
  WordPair w;
  while (e.next(w)) out.push_back(w);
  return out;
}

namespace detail {

std::vector<Symbol> alphabet_remap(const Alphabet& from, const Alphabet& to, const char* which) {
  if (from.size() != to.size())
    throw Error(ErrorCode::alphabet_mismatch, std::string(which) + " alphabets differ in size (" +
                                                  std::to_string(from.size()) + " vs " +
                                                  std::to_string(to.size()) + ")");
  std::vector<Symbol> map(from.size());
  for (Symbol s = 0; s < from.size(); ++s) {
    auto pos = to.find(from.name(s));
    if (!pos)
      throw Error(ErrorCode::alphabet_mismatch, std::string(which) + " symbol '" + from.name(s) +
                                                    "' is missing from the second automaton");
    map[s] = *pos;
  }
  return map;
}

}  // namespace detail

FormattedVerdict check_equiv(const AnyAutomaton& a1, Semantics tag1, const AnyAutomaton& a2,
                             Semantics tag2, std::size_t max_len) {
  if (a1.index() != a2.index())
    throw Error(ErrorCode::semiring_mismatch,
                "cannot compare automata over " + std::string(semiring_name(semiring_of(a1))) +
                    " and " + std::string(semiring_name(semiring_of(a2))));
  return std::visit(
      [&](const auto& t1) -> FormattedVerdict {
        using T = std::remove_cvref_t<decltype(t1)>;
        const auto& t2 = std::get<T>(a2);
        return std::visit(
            [&](const auto& m1, const auto& m2) {
              using S = typename std::remove_cvref_t<decltype(m1)>::semiring_type;
              auto v = check_equiv(m1, tag1, m2, tag2, max_len);
              FormattedVerdict out{v.equal, v.max_len, v.failures, v.checked, std::nullopt};
              if (v.first_divergence) {
                const auto& d = *v.first_divergence;
                out.divergence = format_word(m1.input_alphabet, d.pair.input()) + ";" +
                                 format_word(m1.output_alphabet, d.pair.output()) + ": " +
                                 S::format(d.value1) + " != " + S::format(d.value2);
              }
              return out;
            },
            t1, t2);
      },
      a1);
}

}  // namespace wfa
