#include <map>
#include <vector>

#include "doctest.h"
#include "forno/eval.hpp"
#include "forno/parser.hpp"
#include "forno/validity.hpp"
#include "support/generators.hpp"

using namespace forno;

namespace {

const Register x{"x"};
const Register y{"y"};
const Register p{"p"};

MachineState state_with(const Register& r, std::vector<Nat> top_first, Nat counter = 0) {
  MachineState state;
  state.store.set(r, Stack::from_top_first(std::move(top_first)));
  state.counter = counter;
  return state;
}

}  // namespace

TEST_CASE("a matching pop removes the head") {
  EvalResult r = eval(Term::pop(0, x), state_with(x, {0, 1}));
  CHECK(r.final == state_with(x, {1}));
  CHECK(r.steps == 1);
}

TEST_CASE("a mismatched pop leaves the stack and faults the counter") {
  EvalResult r = eval(Term::pop(0, x), state_with(x, {1}));
  CHECK(r.final == state_with(x, {1}, 1));
}

TEST_CASE("iteration over an empty stack is the identity") {
  MachineState initial = state_with(y, {2, 2});
  EvalResult r = eval(Term::for_loop(x, {Term::push(7, y)}), initial);
  CHECK(r.final == initial);
  CHECK(r.steps == 0);
}

TEST_CASE("iteration dispatches on the element, last body as default") {
  // elements 5 then 0; two bodies, so 5 clamps to body 1 and 0 picks body 0
  Term loop = Term::for_loop(x, {Term::push(0, y), Term::push(1, y)});
  EvalResult r = eval(loop, state_with(x, {5, 0}));
  CHECK(r.final.store.get(y) == Stack::from_top_first({0, 1}));
  CHECK(r.final.store.get(x) == Stack::from_top_first({5, 0}));
}

TEST_CASE("selection runs the body only on a matching head") {
  Term branch = Term::if_eq(x, 3, Term::push(9, y));
  CHECK(eval(branch, state_with(x, {3})).final.store.get(y) == Stack::from_top_first({9}));
  CHECK(eval(branch, state_with(x, {4})).final.store.get(y) == Stack{});
  CHECK(eval(branch, MachineState{}).final.store.get(y) == Stack{});  // empty guard
}

TEST_CASE("selection tests the head even while faulted") {
  Term branch = Term::if_eq(x, 3, Term::pop(3, x));
  EvalResult r = eval(branch, state_with(x, {3}, 2));
  // body ran: the pop matches the head, so the faulted stack stays frozen
  CHECK(r.final == state_with(x, {3}, 2));
  CHECK(r.steps == 2);
}

TEST_CASE("eval_snapshot folds the given stack") {
  MachineState initial = state_with(y, {1});
  CHECK(eval_snapshot(Stack{}, {Term::push(1, p)}, initial) == initial);
  CHECK(eval_snapshot(Stack::from_top_first({0}), {Term::skip()}, initial) == initial);

  // three ones, each picking the second body
  MachineState grown = eval_snapshot(Stack::from_top_first({1, 1, 1}),
                                     {Term::skip(), Term::push(1, p)}, initial);
  CHECK(grown.store.get(p).length() == 3);
}

TEST_CASE("backwards iteration equals forward iteration on the reversed snapshot") {
  testing::Rng rng(314);
  for (int i = 0; i < 1000; ++i) {
    Term t = testing::random_raw_term(rng, 4);
    if (t.kind() != Term::Kind::Rof) {
      t = Term::rof_loop(testing::register_pool()[rng() % 5],
                         {t, testing::random_raw_term(rng, 2)});
    }
    MachineState state = testing::random_state(rng);
    MachineState via_rof = eval(t, state).final;
    MachineState via_fold =
        eval_snapshot(state.store.get(t.guard()).reversed(), t.bodies(), state);
    CHECK(via_rof == via_fold);
  }
}

TEST_CASE("normal blocks are transparent at run time") {
  testing::Rng rng(2718);
  for (int i = 0; i < 300; ++i) {
    Term body = testing::random_raw_term(rng, 4);
    MachineState state = testing::random_state(rng);
    CHECK(eval(Term::normal({x, y}, body), state).final == eval(body, state).final);
  }
}

TEST_CASE("sequencing is associative") {
  testing::Rng rng(161803);
  for (int i = 0; i < 300; ++i) {
    Term a = testing::random_raw_term(rng, 3);
    Term b = testing::random_raw_term(rng, 3);
    Term c = testing::random_raw_term(rng, 3);
    MachineState state = testing::random_state(rng);
    CHECK(eval(Term::seq(a, Term::seq(b, c)), state).final ==
          eval(Term::seq(Term::seq(a, b), c), state).final);
  }
}

TEST_CASE("evaluation is deterministic and total on generated raw terms") {
  testing::Rng rng(5050);
  for (int i = 0; i < 10000; ++i) {
    Term t = testing::random_raw_term(rng, 4);
    MachineState state = testing::random_state(rng);
    EvalResult first = eval(t, state);
    EvalResult second = eval(t, state);
    CHECK(first.final == second.final);
    CHECK(first.steps == second.steps);
  }
}

TEST_CASE("step counting charges atomic work only") {
  CHECK(eval(Term::skip(), MachineState{}).steps == 1);
  CHECK(eval(parse("PUSH[1] x;POP[1] x"), MachineState{}).steps == 2);
  CHECK(eval(parse("IF x = 0 {SKIP}"), MachineState{}).steps == 1);  // test, no body
  // two loop elements: two step charges plus two body pushes
  Term loop = Term::for_loop(x, {Term::push(1, y)});
  CHECK(eval(loop, state_with(x, {0, 0})).steps == 4);
}

TEST_CASE("traces record rule applications in execution order") {
  EvalOptions opts;
  opts.trace = true;
  EvalResult r = eval(parse("PUSH[2] x;IF x = 2 {POP[2] x}"), MachineState{}, opts);
  REQUIRE(r.trace.has_value());
  std::vector<std::string_view> rules;
  for (const TraceEvent& e : *r.trace) {
    rules.push_back(e.rule);
  }
  CHECK(rules == std::vector<std::string_view>{"seq", "push", "if-eq", "pop"});
  CHECK(format_trace_line((*r.trace)[1]) == "push\t0..9\tx=[2]\tcounter=0");
}

TEST_CASE("stacks freeze whenever an operation runs faulted") {
  testing::Rng rng(86420);
  EvalOptions opts;
  opts.trace = true;
  for (int i = 0; i < 400; ++i) {
    Term t = testing::random_raw_term(rng, 4);
    MachineState state = testing::random_state(rng);
    std::map<Register, Stack> last_seen;
    for (const Register& r : registers(t)) {
      last_seen[r] = state.store.get(r);
    }
    Nat counter_before = state.counter;
    EvalResult result = eval(t, state, opts);
    for (const TraceEvent& e : *result.trace) {
      if (e.rule == "push" || e.rule == "pop") {
        if (counter_before >= 1) {
          CHECK(*e.reg_stack == last_seen.at(*e.reg));
        }
        last_seen[*e.reg] = *e.reg_stack;
      }
      counter_before = e.counter;
    }
  }
}

TEST_CASE("deep sequences evaluate without host recursion") {
  std::vector<Term> parts;
  const int n = 200000;
  parts.reserve(n);
  for (int i = 0; i < n; ++i) {
    parts.push_back(Term::push(1, x));
  }
  Term chain = Term::seq_of(std::move(parts));
  EvalResult r = eval(chain, MachineState{});
  CHECK(r.steps == static_cast<Nat>(n));
  CHECK(r.final.store.get(x).length() == static_cast<Nat>(n));
}
