#include "wfa/io.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include <json.hpp>

namespace wfa {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(ErrorCode code, const std::string& where, const std::string& what) {
  throw Error(code, where.empty() ? what : where + ": " + what);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_document(std::string_view text) {
  std::vector<std::set<std::string>> open_objects;
  std::string duplicate;
  auto on_event = [&](int, json::parse_event_t event, json& parsed) {
    switch (event) {
      case json::parse_event_t::object_start: open_objects.emplace_back(); break;
      case json::parse_event_t::object_end:
        if (!open_objects.empty()) open_objects.pop_back();
        break;
      case json::parse_event_t::key:
        if (!open_objects.back().insert(parsed.get<std::string>()).second && duplicate.empty())
          duplicate = parsed.get<std::string>();
        break;
      default: break;
    }
    return true;
  };
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), on_event);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string detail = e.what();
    if (auto pos = detail.find("syntax error"); pos != std::string::npos) detail = detail.substr(pos);
    throw Error(ErrorCode::parse_error, "line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + detail);
  }
  if (!duplicate.empty()) fail(ErrorCode::parse_error, "", "duplicate key '" + duplicate + "'");
  return doc;
}

void check_fields(const json& obj, std::initializer_list<const char*> fields,
                  const std::string& where) {
  if (!obj.is_object()) fail(ErrorCode::parse_error, where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* f : fields) known = known || key == f;
    if (!known) fail(ErrorCode::parse_error, where, "unknown field '" + key + "'");
  }
  for (const char* f : fields)
    if (!obj.contains(f)) fail(ErrorCode::parse_error, where, "missing field '" + std::string(f) + "'");
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) fail(ErrorCode::parse_error, where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> get_names(const json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrorCode::parse_error, where, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const json& get_array(const json& doc, const char* key) {
  const json& j = doc.at(key);
  if (!j.is_array()) fail(ErrorCode::parse_error, key, "expected an array of records");
  return j;
}

[[noreturn]] void carrier_violation(const std::string& where, const std::string& value,
                                    std::string_view carrier) {
  fail(ErrorCode::validation_failed, where,
       "carrier-violation: weight " + value + " lies outside " + std::string(carrier));
}

RationalsSemiring::value_type parse_rational(const std::string& text, const std::string& where) {
  static const std::regex pattern(R"((-?)([0-9]+)(?:/([0-9]+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    fail(ErrorCode::parse_error, where, "malformed rational '" + text + "' (expected p or p/q)");
  using boost::multiprecision::cpp_int;
  cpp_int num(m[2].str());
  cpp_int den(m[3].matched ? m[3].str() : std::string("1"));
  if (den == 0) fail(ErrorCode::parse_error, where, "zero denominator in '" + text + "'");
  RationalsSemiring::value_type v(num);
  v /= RationalsSemiring::value_type(den);
  if (!m[1].str().empty()) v = -v;
  return v;
}

template <Semiring S>
typename S::value_type parse_weight(const json& j, const std::string& where) {
  using V = typename S::value_type;
  V v{};
  if constexpr (S::id == SemiringId::boolean) {
    if (j.is_boolean()) {
      v = j.get<bool>();
    } else if (j.is_number_integer()) {
      if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 1)
        carrier_violation(where, j.dump(), S::carrier);
      v = j.get<std::uint64_t>() == 1;
    } else if (j.is_number()) {
      carrier_violation(where, j.dump(), S::carrier);
    } else {
      fail(ErrorCode::parse_error, where, "boolean weights are 0/1 or true/false");
    }
  } else if constexpr (S::id == SemiringId::naturals) {
    if (j.is_number_unsigned())
      v = j.get<std::uint64_t>();
    else if (j.is_number())
      carrier_violation(where, j.dump(), S::carrier);
    else
      fail(ErrorCode::parse_error, where, "naturals weights are non-negative integers");
  } else if constexpr (S::id == SemiringId::rationals) {
    if (j.is_number_unsigned())
      v = V(j.get<std::uint64_t>());
    else if (j.is_number_integer())
      v = V(j.get<std::int64_t>());
    else if (j.is_string())
      v = parse_rational(j.get<std::string>(), where);
    else
      fail(ErrorCode::parse_error, where, "rational weights are integers or \"p/q\" strings");
  } else {
    if (j.is_number()) {
      v = j.get<double>();
    } else if (S::id == SemiringId::tropical && j.is_string() && j.get<std::string>() == "inf") {
      v = std::numeric_limits<double>::infinity();
    } else {
      fail(ErrorCode::parse_error, where,
           S::id == SemiringId::tropical ? "tropical weights are numbers or \"inf\""
                                         : "expected a numeric weight");
    }
  }
  if (!S::in_carrier(v)) carrier_violation(where, j.dump(), S::carrier);
  return v;
}

template <Semiring S>
json weight_json(const typename S::value_type& v) {
  if constexpr (S::id == SemiringId::boolean)
    return v ? 1 : 0;
  else if constexpr (S::id == SemiringId::naturals)
    return v;
  else if constexpr (S::id == SemiringId::rationals)
    return v.str();
  else if constexpr (S::id == SemiringId::tropical)
    return std::isinf(v) ? json("inf") : json(v);
  else
    return v;
}

// One record of a transitions/outputs array: exact field set, name lookup
// with the record's position in error messages.
class Record {
 public:
  Record(const json& j, std::string where, std::initializer_list<const char*> fields)
      : j_(j), where_(std::move(where)) {
    check_fields(j_, fields, where_);
  }

  std::size_t state(const char* key, const StateSet& states) const {
    auto name = get_string(j_.at(key), where_ + "." + key);
    auto i = states->find(name);
    if (!i) fail(ErrorCode::unknown_name, where_, "unknown state '" + name + "'");
    return *i;
  }

  Symbol symbol(const char* key, const Alphabet& alphabet) const {
    auto name = get_string(j_.at(key), where_ + "." + key);
    auto i = alphabet.find(name);
    if (!i) fail(ErrorCode::unknown_symbol, where_, std::string("unknown ") + key + " symbol '" + name + "'");
    return *i;
  }

  template <Semiring S>
  typename S::value_type weight() const {
    return parse_weight<S>(j_.at("weight"), where_ + ".weight");
  }

  const std::string& where() const { return where_; }

 private:
  const json& j_;
  std::string where_;
};

class DuplicateGuard {
 public:
  void insert(std::vector<std::size_t> key, const std::string& where) {
    if (!seen_.insert(std::move(key)).second)
      fail(ErrorCode::duplicate_name, where, "duplicate record");
  }

 private:
  std::set<std::vector<std::size_t>> seen_;
};

std::string record_where(const char* array, std::size_t i) {
  return std::string(array) + "[" + std::to_string(i) + "]";
}

template <Semiring S>
void read_initial(const json& doc, SrVector<S>& initial) {
  const json& init = doc.at("initial");
  if (!init.is_object()) fail(ErrorCode::parse_error, "initial", "expected an object of state weights");
  const auto& states = initial.states();
  for (const auto& [name, value] : init.items()) {
    auto i = states->find(name);
    if (!i) fail(ErrorCode::unknown_name, "initial", "unknown state '" + name + "'");
    initial.set(*i, parse_weight<S>(value, "initial." + name));
  }
}

template <class Crisp>
void read_crisp_transitions(const json& doc, Crisp& a) {
  a.initial_state = [&] {
    auto name = get_string(doc.at("initial_state"), "initial_state");
    auto i = a.states->find(name);
    if (!i) fail(ErrorCode::unknown_name, "initial_state", "unknown state '" + name + "'");
    return *i;
  }();
  const json& records = get_array(doc, "transitions");
  std::vector<bool> seen(a.next.size(), false);
  for (std::size_t r = 0; r < records.size(); ++r) {
    Record rec(records[r], record_where("transitions", r), {"from", "input", "to"});
    auto from = rec.state("from", a.states);
    auto x = rec.symbol("input", a.input_alphabet);
    auto slot = from * a.input_alphabet.size() + x;
    if (seen[slot]) fail(ErrorCode::duplicate_name, rec.where(), "duplicate record");
    seen[slot] = true;
    a.target(from, x) = rec.state("to", a.states);
  }
  for (std::size_t from = 0; from < a.size(); ++from)
    for (Symbol x = 0; x < a.input_alphabet.size(); ++x)
      if (!seen[from * a.input_alphabet.size() + x])
        fail(ErrorCode::parse_error, "transitions",
             "no transition from '" + a.states->name(from) + "' on '" +
                 a.input_alphabet.name(x) + "' (crisp transitions must be total)");
}

template <class A>
void read_mealy_outputs(const json& doc, A& a) {
  using S = typename A::semiring_type;
  const json& records = get_array(doc, "outputs");
  DuplicateGuard guard;
  for (std::size_t r = 0; r < records.size(); ++r) {
    Record rec(records[r], record_where("outputs", r), {"state", "input", "output", "weight"});
    auto s = rec.state("state", a.states);
    auto x = rec.symbol("input", a.input_alphabet);
    auto y = rec.symbol("output", a.output_alphabet);
    guard.insert({s, x, y}, rec.where());
    a.omega(x, y).set(s, rec.template weight<S>());
  }
}

template <class A>
void read_moore_outputs(const json& doc, A& a) {
  using S = typename A::semiring_type;
  const json& records = get_array(doc, "outputs");
  DuplicateGuard guard;
  for (std::size_t r = 0; r < records.size(); ++r) {
    Record rec(records[r], record_where("outputs", r), {"state", "output", "weight"});
    auto s = rec.state("state", a.states);
    auto y = rec.symbol("output", a.output_alphabet);
    guard.insert({s, y}, rec.where());
    a.omega(y).set(s, rec.template weight<S>());
  }
}

template <class A>
void read_delta(const json& doc, A& a) {
  using S = typename A::semiring_type;
  const json& records = get_array(doc, "transitions");
  DuplicateGuard guard;
  for (std::size_t r = 0; r < records.size(); ++r) {
    Record rec(records[r], record_where("transitions", r), {"from", "input", "to", "weight"});
    auto from = rec.state("from", a.states);
    auto x = rec.symbol("input", a.input_alphabet);
    auto to = rec.state("to", a.states);
    guard.insert({from, x, to}, rec.where());
    a.delta(x).set(from, to, rec.template weight<S>());
  }
}

template <Semiring S>
void read_mu(const json& doc, SequentialWfa<S>& a) {
  const json& records = get_array(doc, "transitions");
  DuplicateGuard guard;
  for (std::size_t r = 0; r < records.size(); ++r) {
    Record rec(records[r], record_where("transitions", r),
               {"from", "input", "output", "to", "weight"});
    auto from = rec.state("from", a.states);
    auto x = rec.symbol("input", a.input_alphabet);
    auto y = rec.symbol("output", a.output_alphabet);
    auto to = rec.state("to", a.states);
    guard.insert({from, x, y, to}, rec.where());
    a.mu(x, y).set(from, to, rec.template weight<S>());
  }
}

template <Semiring S>
TypedAutomaton<S> build(const json& doc, AutomatonKind kind) {
  StateSet states;
  try {
    states = make_state_set(get_names(doc.at("states"), "states"));
  } catch (const Error& e) {
    fail(e.code(), "states", e.what());
  }
  auto alphabet = [&](const char* key) {
    try {
      return Alphabet(get_names(doc.at(key), key));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::parse_error) throw;
      fail(e.code(), key, e.what());
    }
  };
  Alphabet inputs = alphabet("input_alphabet");
  Alphabet outputs = alphabet("output_alphabet");

  auto finish = [](auto a) -> TypedAutomaton<S> {
    require_valid(a);
    return a;
  };
  switch (kind) {
    case AutomatonKind::sequential: {
      SequentialWfa<S> a(states, inputs, outputs);
      read_initial(doc, a.initial);
      read_mu(doc, a);
      return finish(std::move(a));
    }
    case AutomatonKind::mealy: {
      MealyWfa<S> a(states, inputs, outputs);
      read_initial(doc, a.initial);
      read_delta(doc, a);
      read_mealy_outputs(doc, a);
      return finish(std::move(a));
    }
    case AutomatonKind::moore: {
      MooreWfa<S> a(states, inputs, outputs);
      read_initial(doc, a.initial);
      read_delta(doc, a);
      read_moore_outputs(doc, a);
      return finish(std::move(a));
    }
    case AutomatonKind::cd_mealy: {
      CrispMealy<S> a(states, inputs, outputs);
      read_crisp_transitions(doc, a);
      read_mealy_outputs(doc, a);
      return finish(std::move(a));
    }
    case AutomatonKind::cd_moore: {
      CrispMoore<S> a(states, inputs, outputs);
      read_crisp_transitions(doc, a);
      read_moore_outputs(doc, a);
      return finish(std::move(a));
    }
  }
  fail(ErrorCode::parse_error, "kind", "unsupported kind");
}

// ---------------------------------------------------------------------------

template <class A>
json header(const A& a) {
  using S = typename A::semiring_type;
  json doc;
  doc["semiring"] = std::string(S::name);
  doc["kind"] = std::string(to_string(A::kind));
  doc["states"] = a.states->names();
  doc["input_alphabet"] = a.input_alphabet.names();
  doc["output_alphabet"] = a.output_alphabet.names();
  return doc;
}

template <Semiring S>
json initial_json(const SrVector<S>& v) {
  json out = json::object();
  for (const auto& [i, w] : v.entries()) out[v.states()->name(i)] = weight_json<S>(w);
  return out;
}

template <class A>
json delta_json(const A& a) {
  using S = typename A::semiring_type;
  json out = json::array();
  for (Symbol x = 0; x < a.input_alphabet.size(); ++x)
    for (std::size_t from = 0; from < a.size(); ++from)
      for (const auto& [to, w] : a.delta(x).row(from))
        out.push_back({{"from", a.states->name(from)},
                       {"input", a.input_alphabet.name(x)},
                       {"to", a.states->name(to)},
                       {"weight", weight_json<S>(w)}});
  return out;
}

template <class A>
json mealy_outputs_json(const A& a) {
  using S = typename A::semiring_type;
  json out = json::array();
  for (Symbol x = 0; x < a.input_alphabet.size(); ++x)
    for (Symbol y = 0; y < a.output_alphabet.size(); ++y)
      for (const auto& [s, w] : a.omega(x, y).entries())
        out.push_back({{"state", a.states->name(s)},
                       {"input", a.input_alphabet.name(x)},
                       {"output", a.output_alphabet.name(y)},
                       {"weight", weight_json<S>(w)}});
  return out;
}

template <class A>
json moore_outputs_json(const A& a) {
  using S = typename A::semiring_type;
  json out = json::array();
  for (Symbol y = 0; y < a.output_alphabet.size(); ++y)
    for (const auto& [s, w] : a.omega(y).entries())
      out.push_back({{"state", a.states->name(s)},
                     {"output", a.output_alphabet.name(y)},
                     {"weight", weight_json<S>(w)}});
  return out;
}

template <class A>
json crisp_transitions_json(const A& a) {
  json out = json::array();
  for (std::size_t from = 0; from < a.size(); ++from)
    for (Symbol x = 0; x < a.input_alphabet.size(); ++x)
      out.push_back({{"from", a.states->name(from)},
                     {"input", a.input_alphabet.name(x)},
                     {"to", a.states->name(a.target(from, x))}});
  return out;
}

template <Semiring S>
json to_json(const SequentialWfa<S>& a) {
  json doc = header(a);
  doc["initial"] = initial_json(a.initial);
  json records = json::array();
  for (Symbol x = 0; x < a.input_alphabet.size(); ++x)
    for (Symbol y = 0; y < a.output_alphabet.size(); ++y)
      for (std::size_t from = 0; from < a.size(); ++from)
        for (const auto& [to, w] : a.mu(x, y).row(from))
          records.push_back({{"from", a.states->name(from)},
                             {"input", a.input_alphabet.name(x)},
                             {"output", a.output_alphabet.name(y)},
                             {"to", a.states->name(to)},
                             {"weight", weight_json<S>(w)}});
  doc["transitions"] = std::move(records);
  doc["outputs"] = json::array();
  return doc;
}

template <Semiring S>
json to_json(const MealyWfa<S>& a) {
  json doc = header(a);
  doc["initial"] = initial_json(a.initial);
  doc["transitions"] = delta_json(a);
  doc["outputs"] = mealy_outputs_json(a);
  return doc;
}

template <Semiring S>
json to_json(const MooreWfa<S>& a) {
  json doc = header(a);
  doc["initial"] = initial_json(a.initial);
  doc["transitions"] = delta_json(a);
  doc["outputs"] = moore_outputs_json(a);
  return doc;
}

template <Semiring S>
json to_json(const CrispMealy<S>& a) {
  json doc = header(a);
  doc["initial_state"] = a.states->name(a.initial_state);
  doc["transitions"] = crisp_transitions_json(a);
  doc["outputs"] = mealy_outputs_json(a);
  return doc;
}

template <Semiring S>
json to_json(const CrispMoore<S>& a) {
  json doc = header(a);
  doc["initial_state"] = a.states->name(a.initial_state);
  doc["transitions"] = crisp_transitions_json(a);
  doc["outputs"] = moore_outputs_json(a);
  return doc;
}

}  // namespace

AnyAutomaton parse_automaton(std::string_view text) {
  json doc = parse_document(text);
  if (!doc.is_object()) fail(ErrorCode::parse_error, "", "expected a JSON object at top level");
  if (!doc.contains("kind")) fail(ErrorCode::parse_error, "", "missing field 'kind'");
  AutomatonKind kind;
  try {
    kind = automaton_kind_from_name(get_string(doc.at("kind"), "kind"));
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, "kind", e.what());
  }
  const bool crisp = kind == AutomatonKind::cd_mealy || kind == AutomatonKind::cd_moore;
  if (crisp)
    check_fields(doc, {"semiring", "kind", "states", "input_alphabet", "output_alphabet",
                       "initial_state", "transitions", "outputs"},
                 "");
  else
    check_fields(doc, {"semiring", "kind", "states", "input_alphabet", "output_alphabet",
                       "initial", "transitions", "outputs"},
                 "");
  if (kind == AutomatonKind::sequential && !doc.at("outputs").empty())
    fail(ErrorCode::parse_error, "outputs", "sequential automata carry no output records");

  SemiringId id;
  try {
    id = semiring_from_name(get_string(doc.at("semiring"), "semiring"));
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, "semiring", e.what());
  }
  return dispatch_semiring(id, [&](auto tag) -> AnyAutomaton {
    using S = typename decltype(tag)::type;
    return build<S>(doc, kind);
  });
}

std::string serialize(const AnyAutomaton& a) {
  return std::visit(
      [](const auto& typed) {
        return std::visit([](const auto& m) { return to_json(m).dump(2) + "\n"; }, typed);
      },
      a);
}

AnyAutomaton read_automaton_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_automaton(buffer.str());
}

void write_automaton_file(const std::filesystem::path& path, const AnyAutomaton& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path.string() + "'");
  out << serialize(a);
  if (!out) throw Error(ErrorCode::invalid_argument, "failed writing '" + path.string() + "'");
}

}  // namespace wfa
