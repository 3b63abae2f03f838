#include "wfa/automata.hpp"

namespace wfa {

std::string_view to_string(AutomatonKind kind) {
  switch (kind) {
    case AutomatonKind::sequential: return "sequential";
    case AutomatonKind::mealy: return "mealy";
    case AutomatonKind::moore: return "moore";
    case AutomatonKind::cd_mealy: return "cd-mealy";
    case AutomatonKind::cd_moore: return "cd-moore";
  }
  return "?";
}

AutomatonKind automaton_kind_from_name(std::string_view name) {
  for (auto k : {AutomatonKind::sequential, AutomatonKind::mealy, AutomatonKind::moore,
                 AutomatonKind::cd_mealy, AutomatonKind::cd_moore})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::unknown_name,
              "unknown automaton kind '" + std::string(name) +
                  "' (expected sequential, mealy, moore, cd-mealy or cd-moore)");
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::empty_states: return "non-empty-states";
    case ViolationKind::empty_input_alphabet: return "non-empty-alphabet";
    case ViolationKind::empty_output_alphabet: return "non-empty-alphabet";
    case ViolationKind::family_size: return "family-size";
    case ViolationKind::index_mismatch: return "index-mismatch";
    case ViolationKind::carrier: return "carrier-violation";
    case ViolationKind::initial_state: return "initial-state";
    case ViolationKind::transition_target: return "transition-target";
  }
  return "?";
}

std::string describe(const std::vector<Violation>& violations) {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + ": " + v.message;
  }
  return out;
}

WordPair make_word_pair(const Alphabet& inputs, const Alphabet& outputs,
                        const std::vector<std::string>& u, const std::vector<std::string>& v) {
  auto resolve = [](const Alphabet& alphabet, const std::vector<std::string>& word,
                    const char* which) {
    std::vector<Symbol> out;
    out.reserve(word.size());
    for (const auto& s : word) {
      auto i = alphabet.find(s);
      if (!i)
        throw Error(ErrorCode::unknown_symbol,
                    "unknown " + std::string(which) + " symbol '" + s + "'");
      out.push_back(*i);
    }
    return out;
  };
  return WordPair(resolve(inputs, u, "input"), resolve(outputs, v, "output"));
}

std::string format_word(const Alphabet& alphabet, const std::vector<Symbol>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ',';
    out += alphabet.name(word[i]);
  }
  return out;
}

}  // namespace wfa
