#include <catch_amalgamated.hpp>

#include "wfa/any_automaton.hpp"
#include "wfa/examples.hpp"
#include "wfa/random.hpp"
#include "support.hpp"

using namespace wfa;
using G = GodelSemiring;

namespace {

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
  for (const auto& v : vs)
    if (v.kind == kind) return true;
  return false;
}

MealyWfa<G> swap_machine() {
  MealyWfa<G> m(make_state_set({"p", "q"}), Alphabet({"x"}), Alphabet({"y"}));
  m.initial.set(0, 1.0);
  m.delta(0).set(0, 1, 1.0);
  m.delta(0).set(1, 0, 1.0);
  m.omega(0, 0).set(0, 0.3);
  m.omega(0, 0).set(1, 0.6);
  return m;
}

}  // namespace

TEST_CASE("example automata are valid", "[automata]") {
  CHECK(validate(examples::example1()).empty());
  CHECK(validate(examples::example2()).empty());
}

TEST_CASE("carrier violations are reported", "[automata]") {
  auto m = examples::example1();
  m.delta(0).set(0, 0, 1.5);
  auto vs = validate(m);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::carrier);
  CHECK(to_string(vs[0].kind) == "carrier-violation");
  CHECK_THROWS_AS(require_valid(m), Error);
}

TEST_CASE("empty sets are reported", "[automata]") {
  MealyWfa<G> m(make_state_set({"a"}), Alphabet(), Alphabet({"y"}));
  auto vs = validate(m);
  CHECK(has_violation(vs, ViolationKind::empty_input_alphabet));
  CHECK(to_string(ViolationKind::empty_input_alphabet) == "non-empty-alphabet");

  SequentialWfa<G> s(make_state_set({}), Alphabet({"x"}), Alphabet({"y"}));
  CHECK(has_violation(validate(s), ViolationKind::empty_states));
}

TEST_CASE("family sizes and index sets are checked", "[automata]") {
  auto m = examples::example2();
  m.transitions.pop_back();
  CHECK(has_violation(validate(m), ViolationKind::family_size));

  auto n = examples::example1();
  n.initial = SrVector<G>(make_state_set({"a1", "zz"}));
  CHECK(has_violation(validate(n), ViolationKind::index_mismatch));

  CrispMoore<G> c(make_state_set({"a"}), Alphabet({"x"}), Alphabet({"y"}));
  c.initial_state = 3;
  c.next[0] = 7;
  auto vs = validate(c);
  CHECK(has_violation(vs, ViolationKind::initial_state));
  CHECK(has_violation(vs, ViolationKind::transition_target));
}

TEST_CASE("crisp-determinism check", "[automata]") {
  CHECK_FALSE(check_crisp_deterministic(examples::example1()));
  CHECK(check_crisp_deterministic(swap_machine()));
  auto two_initial = swap_machine();
  two_initial.initial.set(1, 1.0);
  CHECK_FALSE(check_crisp_deterministic(two_initial));
  auto missing_row = swap_machine();
  missing_row.delta(0).set(1, 0, 0.0);
  CHECK_FALSE(check_crisp_deterministic(missing_row));
}

TEST_CASE("promotion to functional form", "[automata]") {
  MooreWfa<G> one(make_state_set({"s"}), Alphabet({"x"}), Alphabet({"y"}));
  one.initial.set(0, 1.0);
  one.delta(0).set(0, 0, 1.0);
  auto c1 = promote_to_crisp(one);
  CHECK(c1.initial_state == 0);
  CHECK(c1.target(0, 0) == 0);

  auto c2 = promote_to_crisp(swap_machine());
  CHECK(c2.initial_state == 0);
  CHECK(c2.target(0, 0) == 1);
  CHECK(c2.target(1, 0) == 0);
  CHECK(to_matrix_form(c2) == swap_machine());

  try {
    promote_to_crisp(examples::example2());
    FAIL("expected not_crisp");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_crisp);
  }
}

TEST_CASE("word pairs", "[automata]") {
  auto m = examples::example1();
  auto w = make_word_pair(m.input_alphabet, m.output_alphabet, {"0", "0", "0"}, {"0", "1", "0"});
  CHECK(w.input() == std::vector<Symbol>{0, 0, 0});
  CHECK(w.output() == std::vector<Symbol>{0, 1, 0});
  CHECK(format_word(m.output_alphabet, w.output()) == "0,1,0");
  try {
    make_word_pair(m.input_alphabet, m.output_alphabet, {"0"}, {"2"});
    FAIL("expected unknown_symbol");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unknown_symbol);
  }
  try {
    WordPair({0, 0}, {0});
    FAIL("expected length_mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::length_mismatch);
  }
}

TEST_CASE("names are distinct", "[automata]") {
  CHECK_THROWS_AS(make_state_set({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"0", "0"}), Error);
  CHECK(same_states(make_state_set({"a", "b"}), make_state_set({"a", "b"})));
  CHECK_FALSE(same_states(make_state_set({"a", "b"}), make_state_set({"b", "a"})));
}

TEST_CASE("random automata are deterministic and valid", "[automata][property]") {
  wfa::testing::for_each_semiring([](auto tag) {
    using S = typename decltype(tag)::type;
    for (auto kind : wfa::testing::kAllKinds) {
      INFO(S::name << " " << to_string(kind));
      for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto sizes = random_sizes(seed, 4, 3);
        auto a = random_automaton<S>(kind, sizes, seed);
        auto b = random_automaton<S>(kind, sizes, seed);
        CHECK(a == b);
        CHECK(kind_of(a) == kind);
        std::visit([](const auto& m) { CHECK(validate(m).empty()); }, a);
      }
    }
  });
  auto m1 = random_mealy<G>({2, 2, 2}, 1);
  CHECK(m1 == random_mealy<G>({2, 2, 2}, 1));
  CHECK_FALSE(m1 == random_mealy<G>({2, 2, 2}, 2));
}

TEST_CASE("crisp random machines round-trip through matrix form", "[automata][property]") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto sizes = random_sizes(seed, 4, 3);
    auto cm = random_crisp_mealy<G>(sizes, seed);
    auto matrix = to_matrix_form(cm);
    REQUIRE(check_crisp_deterministic(matrix));
    CHECK(promote_to_crisp(matrix) == cm);
    auto cmo = random_crisp_moore<NaturalsSemiring>(sizes, seed);
    CHECK(promote_to_crisp(to_matrix_form(cmo)) == cmo);
  }
}

TEST_CASE("random generator rejects zero sizes", "[automata]") {
  CHECK_THROWS_AS(random_mealy<G>({0, 1, 1}, 1), Error);
}
