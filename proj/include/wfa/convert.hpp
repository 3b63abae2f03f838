#ifndef WFA_CONVERT_HPP
#define WFA_CONVERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wfa/any_automaton.hpp"
#include "wfa/automata.hpp"
#include "wfa/semantics.hpp"

namespace wfa {

inline constexpr std::uint64_t kDefaultPMax = 64;

// Separator for composite state names: (a, x, y) becomes "a|x|y".
inline constexpr char kStateSeparator = '|';

struct ConversionReport {
  AutomatonKind source_kind;
  std::size_t source_size = 0;
  AutomatonKind target_kind;
  std::size_t target_size = 0;
  int theorem = 0;
  std::size_t size_bound = 0;
  // (source semantics, target semantics) pairs whose behaviors coincide.
  std::vector<std::pair<Semantics, Semantics>> guarantees;
  std::optional<std::uint64_t> p;            // sequential -> Mealy only
  std::optional<std::string> fixed_output;   // sequential -> Moore only
};

std::string describe(const ConversionReport& report);

template <class Target>
struct Converted {
  Target automaton;
  ConversionReport report;
};

namespace detail {

inline std::string join_names(std::initializer_list<std::string_view> parts) {
  std::string out;
  for (auto p : parts) {
    if (!out.empty()) out += kStateSeparator;
    out += p;
  }
  return out;
}

template <class Source, class Target>
ConversionReport make_report(const Source& src, const Target& dst, int theorem,
                             std::size_t bound,
                             std::vector<std::pair<Semantics, Semantics>> guarantees) {
  ConversionReport r{Source::kind, src.size(), Target::kind, dst.size(), theorem, bound,
                     std::move(guarantees), std::nullopt, std::nullopt};
  return r;
}

}  // namespace detail

/// Mealy -> sequential on the same states with
/// mu(a,x,y,b) = omega(a,x,y) . delta(a,x,b). Preserves the s-behavior.
template <Semiring S>
Converted<SequentialWfa<S>> mealy_to_sequential(const MealyWfa<S>& m) {
  require_valid(m);
  SequentialWfa<S> out(m.states, m.input_alphabet, m.output_alphabet);
  out.initial = m.initial;
  for (Symbol x = 0; x < m.input_alphabet.size(); ++x)
    for (Symbol y = 0; y < m.output_alphabet.size(); ++y) {
      const auto& omega = m.omega(x, y);
      for (const auto& [a, w] : omega.entries())
        for (const auto& [b, d] : m.delta(x).row(a)) out.mu(x, y).set(a, b, S::mul(w, d));
    }
  auto report = detail::make_report(m, out, 1, m.size(), {{Semantics::s, Semantics::seq}});
  return {std::move(out), std::move(report)};
}

/// Moore -> sequential on the same states with
/// mu(a,x,y,b) = delta(a,x,b) . omega(b,y). Preserves the 1n-behavior.
template <Semiring S>
Converted<SequentialWfa<S>> moore_to_sequential(const MooreWfa<S>& m) {
  require_valid(m);
  SequentialWfa<S> out(m.states, m.input_alphabet, m.output_alphabet);
  out.initial = m.initial;
  for (Symbol x = 0; x < m.input_alphabet.size(); ++x)
    for (Symbol y = 0; y < m.output_alphabet.size(); ++y) {
      const auto& omega = m.omega(y);
      for (std::size_t a = 0; a < m.size(); ++a)
        for (const auto& [b, d] : m.delta(x).row(a)) {
          auto it = omega.entries().find(b);
          if (it != omega.entries().end()) out.mu(x, y).set(a, b, S::mul(d, it->second));
        }
    }
  auto report = detail::make_report(m, out, 2, m.size(), {{Semantics::one_n, Semantics::seq}});
  return {std::move(out), std::move(report)};
}

/// Sequential -> Moore on A x Y. The output component of a state is the
/// symbol emitted on entering it; the initial vector sits on (a, y0) with y0
/// the first output symbol. Preserves the behavior as the 1n-behavior.
template <Semiring S>
Converted<MooreWfa<S>> sequential_to_moore(const SequentialWfa<S>& s) {
  require_valid(s);
  const std::size_t ny = s.output_alphabet.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (Symbol y = 0; y < ny; ++y)
      names.push_back(detail::join_names({s.states->name(a), s.output_alphabet.name(y)}));
  auto pair_state = [ny](std::size_t a, Symbol y) { return a * ny + y; };

  MooreWfa<S> out(make_state_set(std::move(names)), s.input_alphabet, s.output_alphabet);
  const Symbol y0 = 0;
  for (const auto& [a, w] : s.initial.entries()) out.initial.set(pair_state(a, y0), w);
  for (Symbol x = 0; x < s.input_alphabet.size(); ++x)
    for (Symbol y2 = 0; y2 < ny; ++y2) {
      const auto& mu = s.mu(x, y2);
      for (std::size_t a1 = 0; a1 < s.size(); ++a1)
        for (const auto& [a2, w] : mu.row(a1))
          for (Symbol y1 = 0; y1 < ny; ++y1)
            out.delta(x).set(pair_state(a1, y1), pair_state(a2, y2), w);
    }
  for (Symbol y = 0; y < ny; ++y)
    for (std::size_t a = 0; a < s.size(); ++a) out.omega(y).set(pair_state(a, y), S::one());

  auto report = detail::make_report(s, out, 3, s.size() * ny, {{Semantics::seq, Semantics::one_n}});
  report.fixed_output = s.output_alphabet.name(y0);
  return {std::move(out), std::move(report)};
}

/// Mealy -> Moore on A u (A x X). A state (a, x) records that x was just
/// read from a; its Moore output is omega(a, x, .). Preserves both the 1n-
/// and the n1-behavior.
template <Semiring S>
Converted<MooreWfa<S>> mealy_to_moore(const MealyWfa<S>& m) {
  require_valid(m);
  const std::size_t na = m.size();
  const std::size_t nx = m.input_alphabet.size();
  std::vector<std::string> names = m.states->names();
  for (std::size_t a = 0; a < na; ++a)
    for (Symbol x = 0; x < nx; ++x)
      names.push_back(detail::join_names({m.states->name(a), m.input_alphabet.name(x)}));
  auto pair_state = [na, nx](std::size_t a, Symbol x) { return na + a * nx + x; };

  MooreWfa<S> out(make_state_set(std::move(names)), m.input_alphabet, m.output_alphabet);
  for (const auto& [a, w] : m.initial.entries()) out.initial.set(a, w);
  for (Symbol x = 0; x < nx; ++x) {
    for (std::size_t a = 0; a < na; ++a) out.delta(x).set(a, pair_state(a, x), S::one());
    for (Symbol x1 = 0; x1 < nx; ++x1)
      for (std::size_t a1 = 0; a1 < na; ++a1)
        for (const auto& [a2, w] : m.delta(x1).row(a1))
          out.delta(x).set(pair_state(a1, x1), pair_state(a2, x), w);
  }
  for (Symbol y = 0; y < m.output_alphabet.size(); ++y)
    for (Symbol x = 0; x < nx; ++x)
      for (const auto& [a, w] : m.omega(x, y).entries()) out.omega(y).set(pair_state(a, x), w);

  auto report = detail::make_report(
      m, out, 4, na * (nx + 1),
      {{Semantics::one_n, Semantics::one_n}, {Semantics::n_one, Semantics::n_one}});
  return {std::move(out), std::move(report)};
}

/// Moore -> Mealy on A x A. State (a1, a2) stands for the transition a1 -> a2
/// still to be weighted; its output is delta_x(a1, a2) . omega_y(a2).
/// Preserves the 1n-behavior on non-empty word pairs. On the empty pair the
/// initial weights are counted once per second component.
template <Semiring S>
Converted<MealyWfa<S>> moore_to_mealy(const MooreWfa<S>& m) {
  require_valid(m);
  const std::size_t na = m.size();
  std::vector<std::string> names;
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t a2 = 0; a2 < na; ++a2)
      names.push_back(detail::join_names({m.states->name(a1), m.states->name(a2)}));
  auto pair_state = [na](std::size_t a1, std::size_t a2) { return a1 * na + a2; };

  MealyWfa<S> out(make_state_set(std::move(names)), m.input_alphabet, m.output_alphabet);
  for (const auto& [a, w] : m.initial.entries())
    for (std::size_t a2 = 0; a2 < na; ++a2) out.initial.set(pair_state(a, a2), w);
  for (Symbol x = 0; x < m.input_alphabet.size(); ++x)
    for (std::size_t a1 = 0; a1 < na; ++a1)
      for (std::size_t a2 = 0; a2 < na; ++a2)
        for (std::size_t a3 = 0; a3 < na; ++a3)
          out.delta(x).set(pair_state(a1, a2), pair_state(a2, a3), S::one());
  for (Symbol x = 0; x < m.input_alphabet.size(); ++x)
    for (Symbol y = 0; y < m.output_alphabet.size(); ++y)
      for (std::size_t a1 = 0; a1 < na; ++a1)
        for (const auto& [a2, d] : m.delta(x).row(a1)) {
          auto it = m.omega(y).entries().find(a2);
          if (it != m.omega(y).entries().end())
            out.omega(x, y).set(pair_state(a1, a2), S::mul(d, it->second));
        }

  auto report = detail::make_report(m, out, 5, na * na, {{Semantics::one_n, Semantics::one_n}});
  return {std::move(out), std::move(report)};
}

namespace detail {

// Distinct values of mu, plus zero.
template <Semiring S>
std::vector<typename S::value_type> transition_image(const SequentialWfa<S>& s) {
  std::vector<typename S::value_type> image{S::zero()};
  auto add = [&](const typename S::value_type& v) {
    for (const auto& e : image)
      if (e == v) return;
    image.push_back(v);
  };
  for (const auto& m : s.transitions)
    for (std::size_t a = 0; a < m.size(); ++a)
      for (const auto& [b, v] : m.row(a)) add(v);
  return image;
}

template <Semiring S>
bool scales_to_itself(std::uint64_t n, const typename S::value_type& v) {
  try {
    return S::equal(nat_scale<S>(n, v), v);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::arithmetic_overflow) return false;
    throw;
  }
}

}  // namespace detail

/// Smallest p <= p_max with (p k) s = s for every s in the image of mu,
/// where k = |X| |Y|. Idempotent semirings answer 1 immediately.
template <Semiring S>
std::optional<std::uint64_t> find_p(const SequentialWfa<S>& s, std::uint64_t p_max = kDefaultPMax) {
  if (p_max == 0) throw Error(ErrorCode::invalid_argument, "find_p: p_max must be at least 1");
  if constexpr (S::idempotent) {
    return 1;
  } else {
    const std::uint64_t k = s.input_alphabet.size() * s.output_alphabet.size();
    const auto image = detail::transition_image(s);
    for (std::uint64_t p = 1; p <= p_max; ++p) {
      bool ok = true;
      for (const auto& v : image)
        if (!detail::scales_to_itself<S>(p * k, v)) {
          ok = false;
          break;
        }
      if (ok) return p;
    }
    return std::nullopt;
  }
}

/// Sequential -> Mealy on A x X x Y, when some p <= p_max satisfies the
/// image condition of find_p. A state (a, x, y) commits to reading x and
/// emitting y next; omega checks the commitment and the transition out of it
/// carries mu(a, x, y, .). Preserves the behavior as the s-behavior on
/// non-empty word pairs.
template <Semiring S>
Converted<MealyWfa<S>> sequential_to_mealy(const SequentialWfa<S>& s,
                                           std::uint64_t p_max = kDefaultPMax) {
  require_valid(s);
  const auto p = find_p(s, p_max);
  const std::size_t nx = s.input_alphabet.size();
  const std::size_t ny = s.output_alphabet.size();
  if (!p) {
    std::string witness;
    for (const auto& v : detail::transition_image(s))
      if (!detail::scales_to_itself<S>(nx * ny, v)) {
        witness = S::format(v);
        break;
      }
    throw Error(ErrorCode::condition_unsatisfied,
                "no p <= " + std::to_string(p_max) + " satisfies (p*k)s = s on the image of mu" +
                    " (k = " + std::to_string(nx * ny) + "); witness s = " + witness);
  }

  std::vector<std::string> names;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (Symbol x = 0; x < nx; ++x)
      for (Symbol y = 0; y < ny; ++y)
        names.push_back(detail::join_names(
            {s.states->name(a), s.input_alphabet.name(x), s.output_alphabet.name(y)}));
  auto triple = [nx, ny](std::size_t a, Symbol x, Symbol y) { return (a * nx + x) * ny + y; };

  MealyWfa<S> out(make_state_set(std::move(names)), s.input_alphabet, s.output_alphabet);
  for (const auto& [a, w] : s.initial.entries()) {
    const auto scaled = nat_scale<S>(*p, w);
    for (Symbol x = 0; x < nx; ++x)
      for (Symbol y = 0; y < ny; ++y) out.initial.set(triple(a, x, y), scaled);
  }
  // delta^B((a1,x1,y1), x, (a2,x2,y2)) = mu(a1, x, y1, a2)
  for (Symbol x = 0; x < nx; ++x)
    for (Symbol y1 = 0; y1 < ny; ++y1) {
      const auto& mu = s.mu(x, y1);
      for (std::size_t a1 = 0; a1 < s.size(); ++a1)
        for (const auto& [a2, w] : mu.row(a1))
          for (Symbol x1 = 0; x1 < nx; ++x1)
            for (Symbol x2 = 0; x2 < nx; ++x2)
              for (Symbol y2 = 0; y2 < ny; ++y2)
                out.delta(x).set(triple(a1, x1, y1), triple(a2, x2, y2), w);
    }
  for (Symbol x = 0; x < nx; ++x)
    for (Symbol y = 0; y < ny; ++y)
      for (std::size_t a = 0; a < s.size(); ++a) out.omega(x, y).set(triple(a, x, y), S::one());

  auto report = detail::make_report(s, out, 6, s.size() * nx * ny, {{Semantics::seq, Semantics::s}});
  report.p = *p;
  return {std::move(out), std::move(report)};
}

/// Picks the theorem for (source kind, target kind) whose guarantee mentions
/// tag on either side and applies it. Crisp sources are read in matrix form.
/// Throws no_theorem when nothing matches.
std::pair<AnyAutomaton, ConversionReport> convert(const AnyAutomaton& source, AutomatonKind target,
                                                  Semantics tag, std::uint64_t p_max = kDefaultPMax);

}  // namespace wfa

#endif  // WFA_CONVERT_HPP
