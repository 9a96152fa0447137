#include "doctest.h"
#include "forno/eval.hpp"
#include "forno/invert.hpp"
#include "forno/parser.hpp"
#include "forno/validity.hpp"
#include "support/generators.hpp"

using namespace forno;

namespace {

const Register x{"x"};
const Register y{"y"};

}  // namespace

TEST_CASE("inversion swaps push with pop and reverses sequences") {
  CHECK(invert(Term::push(3, x)) == Term::pop(3, x));
  CHECK(invert(Term::pop(3, x)) == Term::push(3, x));
  CHECK(invert(Term::skip()) == Term::skip());
  CHECK(invert(Term::seq(Term::push(1, x), Term::pop(2, y))) ==
        Term::seq(Term::push(2, y), Term::pop(1, x)));
}

TEST_CASE("inversion swaps the iteration direction and keeps body order") {
  Term loop = parse("NORMAL x { FOR x {PUSH[1] y} {POP[2] y} }");
  CHECK(invert(loop) == parse("NORMAL x { ROF x {POP[1] y} {PUSH[2] y} }"));
  CHECK(invert(parse("IF x = 4 { PUSH[1] y;PUSH[2] y }")) ==
        parse("IF x = 4 { POP[2] y;POP[1] y }"));
}

TEST_CASE("inversion is an involution on raw terms") {
  testing::Rng rng(123);
  for (int i = 0; i < 10000; ++i) {
    Term t = testing::random_raw_term(rng, 5);
    CHECK(invert(invert(t)) == t);
  }
}

TEST_CASE("inversion preserves validity") {
  testing::Rng rng(321);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::random_valid_term(rng, 5);
    REQUIRE(check(t).empty());
    CHECK(check(invert(t)).empty());
  }
}

TEST_CASE("running a valid term then its inverse restores any state") {
  testing::Rng rng(654);
  for (int i = 0; i < 1000; ++i) {
    Term t = testing::random_valid_term(rng, 5);
    Term t_inv = invert(t);
    MachineState state = testing::random_state(rng);  // sound or faulted
    CHECK(eval(Term::seq(t, t_inv), state).final == state);
    CHECK(eval(Term::seq(t_inv, t), state).final == state);
  }
}

TEST_CASE("the round trip can fail when a loop writes its own guard") {
  Term t = Term::for_loop(x, {Term::push(1, x)});
  REQUIRE(!check(t).empty());  // not a valid program
  MachineState state;
  state.store.set(x, Stack::from_top_first({1}));
  MachineState after = eval(Term::seq(t, invert(t)), state).final;
  CHECK(after != state);
}
