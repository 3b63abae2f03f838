#ifndef WFA_EXAMPLES_HPP
#define WFA_EXAMPLES_HPP

#include "wfa/automata.hpp"

namespace wfa::examples {

// Two-state Goedel Mealy automata used by `wfa demo`.
// example1: X = {0}, Y = {0,1}. example2: X = {0,1}, Y = {0}.
MealyWfa<GodelSemiring> example1();
MealyWfa<GodelSemiring> example2();

}  // namespace wfa::examples

#endif  // WFA_EXAMPLES_HPP
