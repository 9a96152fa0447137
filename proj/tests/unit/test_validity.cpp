#include <algorithm>
#include <map>
#include <set>
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
const Register z{"z"};

std::multiset<ViolationKind> kinds_of(const std::vector<Violation>& violations) {
  std::multiset<ViolationKind> kinds;
  for (const Violation& v : violations) {
    kinds.insert(v.kind);
  }
  return kinds;
}

// Every (guard, body) pair of IF/FOR/ROF nodes in t.
void guarded_bodies(const Term& t, std::vector<std::pair<Register, Term>>& out) {
  switch (t.kind()) {
    case Term::Kind::Skip:
    case Term::Kind::Push:
    case Term::Kind::Pop:
      return;
    case Term::Kind::Seq:
      guarded_bodies(t.first(), out);
      guarded_bodies(t.second(), out);
      return;
    case Term::Kind::If:
      out.emplace_back(t.guard(), t.body());
      guarded_bodies(t.body(), out);
      return;
    case Term::Kind::Normal:
      guarded_bodies(t.body(), out);
      return;
    case Term::Kind::For:
    case Term::Kind::Rof:
      for (const Term& body : t.bodies()) {
        out.emplace_back(t.guard(), body);
        guarded_bodies(body, out);
      }
      return;
  }
}

}  // namespace

TEST_CASE("written_registers lists push/pop targets only") {
  CHECK(written_registers(Term::skip()).empty());
  CHECK(written_registers(Term::if_eq(x, 1, Term::push(2, y))) == std::set<Register>{y});

  Term body = parse("FOR z {FOR x {PUSH[1] y};FOR y {PUSH[1] x}}");
  CHECK(written_registers(body) == std::set<Register>{x, y});
}

TEST_CASE("mutual growth under a normal block is rejected") {
  Term excluded = parse("NORMAL x,y,z {FOR z {FOR x {PUSH[1] y};FOR y {PUSH[1] x}}}");
  auto violations = check(excluded);
  CHECK(kinds_of(violations) ==
        std::multiset<ViolationKind>{ViolationKind::WriteToNormal, ViolationKind::WriteToNormal});
  std::set<Register> offenders;
  for (const Violation& v : violations) {
    REQUIRE(v.reg.has_value());
    offenders.insert(*v.reg);
  }
  CHECK(offenders == std::set<Register>{x, y});
}

TEST_CASE("iterations may not appear outside a normal block") {
  auto violations = check(parse("FOR x {SKIP}"));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::IterationOutsideNormal);
  CHECK(violations[0].reg == x);

  CHECK(kinds_of(check(parse("IF y = 0 { ROF x {SKIP} }"))) ==
        std::multiset<ViolationKind>{ViolationKind::IterationOutsideNormal});
}

TEST_CASE("normal blocks may not nest") {
  auto violations = check(parse("NORMAL x { NORMAL y { SKIP } }"));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::NestedNormal);
}

TEST_CASE("iterations must be led by a normal register") {
  auto violations = check(parse("NORMAL y { FOR x { SKIP } }"));
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == ViolationKind::IterationLedByNonNormal);
  CHECK(violations[0].reg == x);
}

TEST_CASE("guards are read-only in their bodies") {
  auto direct = check(parse("IF x = 0 { POP[1] x }"));
  REQUIRE(direct.size() == 1);
  CHECK(direct[0].kind == ViolationKind::WriteToGuard);
  CHECK(direct[0].reg == x);
  CHECK(direct[0].span.begin == 11);  // the write, not the selection

  // a write buried under another selection still violates the outer guard
  auto nested = check(parse("IF x = 0 { IF y = 1 { PUSH[2] x } }"));
  CHECK(kinds_of(nested) == std::multiset<ViolationKind>{ViolationKind::WriteToGuard});

  auto loop = check(parse("NORMAL x { FOR x { POP[0] x } }"));
  CHECK(kinds_of(loop) == std::multiset<ViolationKind>{ViolationKind::WriteToGuard,
                                                       ViolationKind::WriteToNormal});
}

TEST_CASE("atomic terms and their compositions always pass") {
  CHECK(is_valid(parse("SKIP")));
  CHECK(is_valid(parse("PUSH[0] x;POP[0] x;SKIP;PUSH[3] y")));
  CHECK(is_valid(parse("IF x = 1 { PUSH[1] y };IF y = 0 { POP[2] x }")));
  CHECK(is_valid(parse("NORMAL x { FOR x {POP[0] y} {PUSH[1] y} }")));
}

TEST_CASE("generated valid terms pass the checker") {
  testing::Rng rng(4242);
  for (int i = 0; i < 500; ++i) {
    Term t = testing::random_valid_term(rng, 5);
    CHECK(check(t).empty());
  }
}

TEST_CASE("checking commutes with renaming") {
  testing::Rng rng(11);
  std::map<Register, Register> fresh;
  const auto& pool = testing::register_pool();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    fresh.emplace(pool[i], Register{"w" + std::to_string(i)});
  }
  for (int i = 0; i < 300; ++i) {
    Term t = testing::random_raw_term(rng, 5);
    CHECK(kinds_of(check(t)) == kinds_of(check(rename(t, fresh))));
  }
}

TEST_CASE("valid terms never change a guard under its own bodies") {
  testing::Rng rng(7531);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    Term t = testing::random_valid_term(rng, 5);
    REQUIRE(check(t).empty());
    std::vector<std::pair<Register, Term>> pairs;
    guarded_bodies(t, pairs);
    for (const auto& [guard, body] : pairs) {
      MachineState before = testing::random_state(rng);
      Stack expected = before.store.get(guard);
      MachineState after = eval(body, before).final;
      CHECK(after.store.get(guard) == expected);
      ++checked;
    }
  }
  CHECK(checked > 100);  // the generator produced enough guarded bodies
}
