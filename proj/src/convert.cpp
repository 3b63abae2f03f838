#include "wfa/convert.hpp"

namespace wfa {

std::string describe(const ConversionReport& report) {
  std::string out = "theorem " + std::to_string(report.theorem) + ": " +
                    std::string(to_string(report.source_kind)) + " (" +
                    std::to_string(report.source_size) + " states) -> " +
                    std::string(to_string(report.target_kind)) + " (" +
                    std::to_string(report.target_size) + " states, bound " +
                    std::to_string(report.size_bound) + ")";
  for (const auto& [from, to] : report.guarantees)
    out += "; " + std::string(to_string(from)) + " -> " + std::string(to_string(to));
  if (report.p) out += "; p = " + std::to_string(*report.p);
  if (report.fixed_output) out += "; y0 = " + *report.fixed_output;
  return out;
}

namespace {

struct TheoremEntry {
  int theorem;
  AutomatonKind from;
  AutomatonKind to;
  std::vector<std::pair<Semantics, Semantics>> guarantees;
};

const std::vector<TheoremEntry>& theorem_table() {
  static const std::vector<TheoremEntry> table = {
      {1, AutomatonKind::mealy, AutomatonKind::sequential, {{Semantics::s, Semantics::seq}}},
      {2, AutomatonKind::moore, AutomatonKind::sequential, {{Semantics::one_n, Semantics::seq}}},
      {3, AutomatonKind::sequential, AutomatonKind::moore, {{Semantics::seq, Semantics::one_n}}},
      {4, AutomatonKind::mealy, AutomatonKind::moore,
       {{Semantics::one_n, Semantics::one_n}, {Semantics::n_one, Semantics::n_one}}},
      {5, AutomatonKind::moore, AutomatonKind::mealy, {{Semantics::one_n, Semantics::one_n}}},
      {6, AutomatonKind::sequential, AutomatonKind::mealy, {{Semantics::seq, Semantics::s}}},
  };
  return table;
}

AutomatonKind matrix_kind(AutomatonKind k) {
  if (k == AutomatonKind::cd_mealy) return AutomatonKind::mealy;
  if (k == AutomatonKind::cd_moore) return AutomatonKind::moore;
  return k;
}

template <Semiring S>
std::pair<AnyAutomaton, ConversionReport> apply(int theorem, const TypedAutomaton<S>& typed,
                                                std::uint64_t p_max) {
  auto wrap = [](auto converted) {
    return std::pair<AnyAutomaton, ConversionReport>(
        AnyAutomaton(TypedAutomaton<S>(std::move(converted.automaton))),
        std::move(converted.report));
  };
  auto as_mealy = [&]() -> MealyWfa<S> {
    if (auto c = std::get_if<CrispMealy<S>>(&typed)) return to_matrix_form(*c);
    return std::get<MealyWfa<S>>(typed);
  };
  auto as_moore = [&]() -> MooreWfa<S> {
    if (auto c = std::get_if<CrispMoore<S>>(&typed)) return to_matrix_form(*c);
    return std::get<MooreWfa<S>>(typed);
  };
  switch (theorem) {
    case 1: return wrap(mealy_to_sequential(as_mealy()));
    case 2: return wrap(moore_to_sequential(as_moore()));
    case 3: return wrap(sequential_to_moore(std::get<SequentialWfa<S>>(typed)));
    case 4: return wrap(mealy_to_moore(as_mealy()));
    case 5: return wrap(moore_to_mealy(as_moore()));
    case 6: return wrap(sequential_to_mealy(std::get<SequentialWfa<S>>(typed), p_max));
    default: break;
  }
  throw Error(ErrorCode::no_theorem, "unknown theorem " + std::to_string(theorem));
}

}  // namespace

std::pair<AnyAutomaton, ConversionReport> convert(const AnyAutomaton& source, AutomatonKind target,
                                                  Semantics tag, std::uint64_t p_max) {
  const AutomatonKind from = matrix_kind(kind_of(source));
  for (const auto& entry : theorem_table()) {
    if (entry.from != from || entry.to != target) continue;
    for (const auto& [src_tag, dst_tag] : entry.guarantees) {
      if (src_tag != tag && dst_tag != tag) continue;
      return std::visit(
          [&](const auto& typed) {
            using T = std::remove_cvref_t<decltype(typed)>;
            using S = typename std::variant_alternative_t<0, T>::semiring_type;
            return apply<S>(entry.theorem, typed, p_max);
          },
          source);
    }
  }
  throw Error(ErrorCode::no_theorem,
              "no conversion theorem maps " + std::string(to_string(kind_of(source))) + " to " +
                  std::string(to_string(target)) + " under semantics '" +
                  std::string(to_string(tag)) + "'");
}

}  // namespace wfa
