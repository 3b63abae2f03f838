#ifndef WFA_RANDOM_HPP
#define WFA_RANDOM_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wfa/any_automaton.hpp"
#include "wfa/automata.hpp"

namespace wfa {

struct Sizes {
  std::size_t states = 1;
  std::size_t inputs = 1;
  std::size_t outputs = 1;
};

// Small finite weight palettes: zero, one and up to four mid-range carrier
// values, so that structural zeros and annihilation are both exercised.
template <Semiring S>
std::vector<typename S::value_type> weight_palette();

template <>
inline std::vector<bool> weight_palette<BooleanSemiring>() {
  return {false, true};
}
template <>
inline std::vector<double> weight_palette<GodelSemiring>() {
  return {0.0, 1.0, 0.2, 0.4, 0.5, 0.7};
}
template <>
inline std::vector<double> weight_palette<ViterbiSemiring>() {
  return {0.0, 1.0, 0.2, 0.5, 0.75, 0.9};
}
template <>
inline std::vector<double> weight_palette<TropicalSemiring>() {
  return {TropicalSemiring::zero(), 0.0, 0.5, 1.0, 2.5, 4.0};
}
template <>
inline std::vector<std::uint64_t> weight_palette<NaturalsSemiring>() {
  return {0, 1, 2, 3, 4, 5};
}
template <>
inline std::vector<RationalsSemiring::value_type> weight_palette<RationalsSemiring>() {
  using Q = RationalsSemiring::value_type;
  return {Q(0), Q(1), Q(1, 2), Q(2, 3), Q(3, 4), Q(5, 2)};
}

namespace detail {

inline std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

template <Semiring S>
class WeightSource {
 public:
  explicit WeightSource(std::uint64_t seed) : rng_(seed), palette_(weight_palette<S>()) {}

  typename S::value_type weight() { return palette_[index(palette_.size())]; }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  void fill(SrVector<S>& v) {
    for (std::size_t a = 0; a < v.size(); ++a) v.set(a, weight());
  }
  void fill(SrMatrix<S>& m) {
    for (std::size_t a = 0; a < m.size(); ++a)
      for (std::size_t b = 0; b < m.size(); ++b) m.set(a, b, weight());
  }

 private:
  std::mt19937_64 rng_;
  std::vector<typename S::value_type> palette_;
};

inline void require_sizes(const Sizes& sizes) {
  if (sizes.states == 0 || sizes.inputs == 0 || sizes.outputs == 0)
    throw Error(ErrorCode::invalid_argument, "random automaton sizes must be at least 1");
}

}  // namespace detail

// States are named q0.., inputs x0.., outputs y0...

template <Semiring S>
SequentialWfa<S> random_sequential(const Sizes& sizes, std::uint64_t seed) {
  detail::require_sizes(sizes);
  detail::WeightSource<S> src(seed);
  SequentialWfa<S> a(make_state_set(detail::numbered("q", sizes.states)),
                     Alphabet(detail::numbered("x", sizes.inputs)),
                     Alphabet(detail::numbered("y", sizes.outputs)));
  src.fill(a.initial);
  for (auto& m : a.transitions) src.fill(m);
  return a;
}

template <Semiring S>
MealyWfa<S> random_mealy(const Sizes& sizes, std::uint64_t seed) {
  detail::require_sizes(sizes);
  detail::WeightSource<S> src(seed);
  MealyWfa<S> a(make_state_set(detail::numbered("q", sizes.states)),
                Alphabet(detail::numbered("x", sizes.inputs)),
                Alphabet(detail::numbered("y", sizes.outputs)));
  src.fill(a.initial);
  for (auto& m : a.transitions) src.fill(m);
  for (auto& v : a.output_weights) src.fill(v);
  return a;
}

template <Semiring S>
MooreWfa<S> random_moore(const Sizes& sizes, std::uint64_t seed) {
  detail::require_sizes(sizes);
  detail::WeightSource<S> src(seed);
  MooreWfa<S> a(make_state_set(detail::numbered("q", sizes.states)),
                Alphabet(detail::numbered("x", sizes.inputs)),
                Alphabet(detail::numbered("y", sizes.outputs)));
  src.fill(a.initial);
  for (auto& m : a.transitions) src.fill(m);
  for (auto& v : a.output_weights) src.fill(v);
  return a;
}

template <Semiring S>
CrispMealy<S> random_crisp_mealy(const Sizes& sizes, std::uint64_t seed) {
  detail::require_sizes(sizes);
  detail::WeightSource<S> src(seed);
  CrispMealy<S> a(make_state_set(detail::numbered("q", sizes.states)),
                  Alphabet(detail::numbered("x", sizes.inputs)),
                  Alphabet(detail::numbered("y", sizes.outputs)));
  a.initial_state = src.index(sizes.states);
  for (auto& t : a.next) t = src.index(sizes.states);
  for (auto& v : a.output_weights) src.fill(v);
  return a;
}

template <Semiring S>
CrispMoore<S> random_crisp_moore(const Sizes& sizes, std::uint64_t seed) {
  detail::require_sizes(sizes);
  detail::WeightSource<S> src(seed);
  CrispMoore<S> a(make_state_set(detail::numbered("q", sizes.states)),
                  Alphabet(detail::numbered("x", sizes.inputs)),
                  Alphabet(detail::numbered("y", sizes.outputs)));
  a.initial_state = src.index(sizes.states);
  for (auto& t : a.next) t = src.index(sizes.states);
  for (auto& v : a.output_weights) src.fill(v);
  return a;
}

/// Deterministic in (kind, semiring, sizes, seed).
template <Semiring S>
TypedAutomaton<S> random_automaton(AutomatonKind kind, const Sizes& sizes, std::uint64_t seed) {
  switch (kind) {
    case AutomatonKind::sequential: return random_sequential<S>(sizes, seed);
    case AutomatonKind::mealy: return random_mealy<S>(sizes, seed);
    case AutomatonKind::moore: return random_moore<S>(sizes, seed);
    case AutomatonKind::cd_mealy: return random_crisp_mealy<S>(sizes, seed);
    case AutomatonKind::cd_moore: return random_crisp_moore<S>(sizes, seed);
  }
  throw Error(ErrorCode::invalid_argument, "unsupported automaton kind");
}

/// Sizes drawn from a seed: |A| in [1, max_states], |X|, |Y| in [1, max_symbols].
inline Sizes random_sizes(std::uint64_t seed, std::size_t max_states, std::size_t max_symbols) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  return {1 + static_cast<std::size_t>(rng() % max_states),
          1 + static_cast<std::size_t>(rng() % max_symbols),
          1 + static_cast<std::size_t>(rng() % max_symbols)};
}

}  // namespace wfa

#endif  // WFA_RANDOM_HPP
