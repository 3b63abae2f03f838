// wfa: validate, evaluate, convert and compare weighted automata files.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wfa/convert.hpp"
#include "wfa/equiv.hpp"
#include "wfa/examples.hpp"
#include "wfa/io.hpp"
#include "wfa/semantics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::vector<std::string> split_word(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string evaluate(const wfa::AnyAutomaton& a, wfa::Semantics tag, const std::string& input,
                     const std::string& output) {
  return std::visit(
      [&](const auto& typed) {
        return std::visit(
            [&](const auto& m) {
              using S = typename std::remove_cvref_t<decltype(m)>::semiring_type;
              auto w = wfa::make_word_pair(m.input_alphabet, m.output_alphabet, split_word(input),
                                           split_word(output));
              return S::format(wfa::behavior(m, tag, w));
            },
            typed);
      },
      a);
}

int cmd_validate(const std::string& file) {
  auto a = wfa::read_automaton_file(file);
  std::cout << "valid " << wfa::to_string(wfa::kind_of(a)) << " automaton over "
            << wfa::semiring_name(wfa::semiring_of(a)) << ", " << wfa::state_count(a)
            << " states\n";
  return kExitOk;
}

int cmd_eval(const std::string& file, const std::string& tag, const std::string& input,
             const std::string& output) {
  auto a = wfa::read_automaton_file(file);
  std::cout << evaluate(a, wfa::semantics_from_name(tag), input, output) << "\n";
  return kExitOk;
}

int cmd_convert(const std::string& file, const std::string& to, const std::string& tag,
                std::uint64_t p_max, const std::string& out_path) {
  auto a = wfa::read_automaton_file(file);
  auto [converted, report] = wfa::convert(a, wfa::automaton_kind_from_name(to),
                                          wfa::semantics_from_name(tag), p_max);
  if (out_path.empty())
    std::cout << wfa::serialize(converted);
  else
    wfa::write_automaton_file(out_path, converted);
  std::cerr << wfa::describe(report) << "\n";
  return kExitOk;
}

int cmd_equiv(const std::string& file1, const std::string& tag1, const std::string& file2,
              const std::string& tag2, std::size_t max_len) {
  auto a1 = wfa::read_automaton_file(file1);
  auto a2 = wfa::read_automaton_file(file2);
  auto verdict = wfa::check_equiv(a1, wfa::semantics_from_name(tag1), a2,
                                  wfa::semantics_from_name(tag2), max_len);
  if (verdict.equal) {
    std::cout << "equal (" << verdict.checked << " word pairs up to length " << verdict.max_len
              << ")\n";
    return kExitOk;
  }
  std::cout << "not equal (" << verdict.failures << " of " << verdict.checked
            << " word pairs differ up to length " << verdict.max_len << ")\n"
            << *verdict.divergence << "\n";
  return kExitNegative;
}

void demo_row(const wfa::MealyWfa<wfa::GodelSemiring>& a, wfa::Semantics tag,
              const std::vector<std::string>& u, const std::vector<std::string>& v) {
  auto w = wfa::make_word_pair(a.input_alphabet, a.output_alphabet, u, v);
  std::cout << "  [" << wfa::to_string(tag) << "](" << wfa::format_word(a.input_alphabet, w.input())
            << ";" << wfa::format_word(a.output_alphabet, w.output())
            << ") = " << wfa::GodelSemiring::format(wfa::behavior(a, tag, w)) << "\n";
}

int cmd_demo(const std::string& name) {
  using wfa::Semantics;
  if (name == "example1") {
    auto a = wfa::examples::example1();
    std::cout << "example1: Goedel Mealy automaton, X = {0}, Y = {0,1}\n";
    for (auto tag : {Semantics::one_n, Semantics::s, Semantics::n_one})
      demo_row(a, tag, {"0", "0", "0"}, {"0", "1", "0"});
    return kExitOk;
  }
  if (name == "example2") {
    auto a = wfa::examples::example2();
    std::cout << "example2: Goedel Mealy automaton, X = {0,1}, Y = {0}\n";
    for (auto tag : {Semantics::one_n, Semantics::s, Semantics::n_one})
      demo_row(a, tag, {"0", "1"}, {"0", "0"});
    return kExitOk;
  }
  throw wfa::Error(wfa::ErrorCode::unknown_name,
                   "unknown demo '" + name + "' (expected example1 or example2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted finite automata with output over semirings"};
  app.require_subcommand(1);

  std::string file, file2, tag, tag2, input, output, to, out_path, demo;
  std::uint64_t p_max = wfa::kDefaultPMax;
  std::size_t max_len = wfa::kDefaultMaxLen;

  auto* validate = app.add_subcommand("validate", "Parse and validate an automaton file");
  validate->add_option("FILE", file)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate a behavior on one word pair");
  eval->add_option("FILE", file)->required();
  eval->add_option("--semantics", tag, "seq, 1n, n1, s or cd")->required();
  eval->add_option("--input", input, "comma-separated input symbols; omit for the empty word");
  eval->add_option("--output", output, "comma-separated output symbols; omit for the empty word");

  auto* convert = app.add_subcommand("convert", "Convert to another model kind");
  convert->add_option("FILE", file)->required();
  convert->add_option("--to", to, "sequential, mealy or moore")->required();
  convert->add_option("--semantics", tag, "semantics the conversion must preserve")->required();
  convert->add_option("--p-max", p_max, "search bound for p (sequential -> mealy)")
      ->check(CLI::PositiveNumber);
  convert->add_option("-o,--output", out_path, "write here instead of stdout");

  auto* equiv = app.add_subcommand("equiv", "Compare two behaviors on all short word pairs");
  equiv->add_option("FILE1", file)->required();
  equiv->add_option("TAG1", tag)->required();
  equiv->add_option("FILE2", file2)->required();
  equiv->add_option("TAG2", tag2)->required();
  equiv->add_option("--max-len", max_len, "longest word pair checked");

  auto* demo_cmd = app.add_subcommand("demo", "Evaluate a built-in example");
  demo_cmd->add_option("NAME", demo, "example1 or example2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*eval) return cmd_eval(file, tag, input, output);
    if (*convert) return cmd_convert(file, to, tag, p_max, out_path);
    if (*equiv) return cmd_equiv(file, tag, file2, tag2, max_len);
    if (*demo_cmd) return cmd_demo(demo);
  } catch (const wfa::Error& e) {
    std::cerr << "error (" << wfa::to_string(e.code()) << "): " << e.what() << "\n";
    return e.code() == wfa::ErrorCode::condition_unsatisfied ? kExitNegative : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
