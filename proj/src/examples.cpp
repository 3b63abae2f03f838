#include "wfa/examples.hpp"

namespace wfa::examples {

namespace {

MealyWfa<GodelSemiring> two_state(std::vector<std::string> inputs, std::vector<std::string> outputs) {
  MealyWfa<GodelSemiring> a(make_state_set({"a1", "a2"}), Alphabet(std::move(inputs)),
                            Alphabet(std::move(outputs)));
  a.initial.set(0, 1.0);
  a.delta(0).set(0, 0, 0.7);
  a.delta(0).set(0, 1, 0.5);
  a.delta(0).set(1, 1, 0.8);
  return a;
}

}  // namespace

MealyWfa<GodelSemiring> example1() {
  auto a = two_state({"0"}, {"0", "1"});
  a.omega(0, 0).set(0, 0.6);
  a.omega(0, 0).set(1, 0.4);
  a.omega(0, 1).set(0, 0.2);
  a.omega(0, 1).set(1, 0.7);
  return a;
}

MealyWfa<GodelSemiring> example2() {
  auto a = two_state({"0", "1"}, {"0"});
  a.delta(1).set(0, 0, 0.3);
  a.delta(1).set(0, 1, 1.0);
  a.delta(1).set(1, 0, 0.2);
  a.omega(0, 0).set(0, 0.6);
  a.omega(0, 0).set(1, 0.4);
  a.omega(1, 0).set(0, 0.2);
  a.omega(1, 0).set(1, 0.7);
  return a;
}

}  // namespace wfa::examples
