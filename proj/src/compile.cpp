#include "forno/compile.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace forno {

std::vector<std::pair<std::string, Register>> RoleSet::as_table() const {
  return {{"rgt", rgt},       {"lft", lft},     {"q", q},
          {"p", p},           {"g", g},         {"g1", g1},
          {"qStart", q_start}, {"aStart", a_start}, {"empty", empty},
          {"emptyT", empty_t}, {"t", scratch}};
}

Term pow_term(Nat degree, const Register& source, const Register& target) {
  if (degree == 0) {
    throw std::invalid_argument("pow_term needs degree >= 1");
  }
  if (source == target) {
    throw std::invalid_argument("pow_term needs distinct source and target");
  }
  Term body = Term::push(1, target);
  for (Nat i = 0; i < degree; ++i) {
    body = Term::for_loop(source, {std::move(body)});
  }
  return Term::normal({source}, std::move(body));
}

Term polynomial_term(const Polynomial& p, const Register& source, const Register& target) {
  std::vector<Term> parts;
  for (Nat i = 0; i < p.coefficient; ++i) {
    parts.push_back(pow_term(p.exponent, source, target));
  }
  for (Nat i = 0; i < p.constant; ++i) {
    parts.push_back(Term::push(1, target));
  }
  return Term::seq_of(std::move(parts));
}

Term empty_macro(const Register& x, const Register& verdict, const std::set<Nat>& codes) {
  assert(x != verdict);
  std::vector<Term> parts;
  parts.push_back(Term::push(0, verdict));
  for (Nat code : codes) {
    parts.push_back(
        Term::if_eq(x, code, Term::seq(Term::pop(0, verdict), Term::push(1, verdict))));
  }
  return Term::seq_of(std::move(parts));
}

Term to_macro(const Register& x, const Register& y, const std::set<Nat>& codes,
              const Register& scratch, const Register& verdict) {
  assert(x != y && x != scratch && x != verdict && y != scratch && y != verdict &&
         scratch != verdict);
  std::vector<Term> moves;
  // Stage the top of x on the scratch register, transfer it to y, then
  // retire the scratch copy. Each chain fires exactly once because the
  // register it tests keeps the same head through its remaining links.
  for (Nat code : codes) {
    moves.push_back(Term::if_eq(x, code, Term::push(code, scratch)));
  }
  for (Nat code : codes) {
    moves.push_back(
        Term::if_eq(scratch, code, Term::seq(Term::pop(code, x), Term::push(code, y))));
  }
  for (Nat code : codes) {
    moves.push_back(Term::if_eq(y, code, Term::pop(code, scratch)));
  }
  return Term::seq(empty_macro(x, verdict, codes),
                   Term::if_eq(verdict, 1, Term::seq_of(std::move(moves))));
}

namespace {

std::set<Nat> tape_codes(const Encoding& enc) {
  std::set<Nat> codes;
  for (Nat c = 0; c < enc.symbol_count(); ++c) {
    codes.insert(c);
  }
  return codes;
}

}  // namespace

Term transition_l(Nat next_state, Nat write_symbol, const RoleSet& roles, const Encoding& enc) {
  std::set<Nat> codes = tape_codes(enc);
  return Term::seq_of({
      Term::push(next_state, roles.q),
      to_macro(roles.rgt, roles.g, codes, roles.scratch, roles.empty_t),
      Term::push(write_symbol, roles.rgt),
      empty_macro(roles.lft, roles.empty, codes),
      Term::if_eq(roles.empty, 1,
                  to_macro(roles.lft, roles.rgt, codes, roles.scratch, roles.empty_t)),
  });
}

Term transition_r(Nat next_state, Nat write_symbol, const RoleSet& roles, const Encoding& enc) {
  std::set<Nat> codes = tape_codes(enc);
  return Term::seq_of({
      Term::push(next_state, roles.q),
      to_macro(roles.rgt, roles.g, codes, roles.scratch, roles.empty_t),
      Term::push(write_symbol, roles.rgt),
      to_macro(roles.rgt, roles.lft, codes, roles.scratch, roles.empty_t),
      empty_macro(roles.rgt, roles.empty, codes),
      Term::if_eq(roles.empty, 0, Term::push(enc.blank_code(), roles.rgt)),
  });
}

Term simulate_term(const TuringMachine& m, const RoleSet& roles, const Encoding& enc) {
  std::vector<Term> parts;
  // Snapshot the current state; the halting state is included so that a
  // halted configuration refreshes qStart and no dispatch arm fires on the
  // stale value underneath.
  for (const std::string& state : m.states) {
    Nat code = enc.state_code(state);
    parts.push_back(Term::if_eq(roles.q, code, Term::push(code, roles.q_start)));
  }
  // Snapshot the scanned symbol.
  for (Nat code = 0; code < enc.symbol_count(); ++code) {
    parts.push_back(Term::if_eq(roles.rgt, code, Term::push(code, roles.a_start)));
  }
  // Dispatch on (state, symbol).
  for (const std::string& state : m.states) {
    if (state == m.halt) {
      continue;
    }
    std::vector<Term> arms;
    for (Nat code = 0; code < enc.symbol_count(); ++code) {
      const TmAction& action = m.delta.at({state, enc.symbol_at(code)});
      Nat next_state = enc.state_code(action.state);
      Nat written = enc.symbol_code(action.write);
      Term transition = action.move == Move::Left
                            ? transition_l(next_state, written, roles, enc)
                            : transition_r(next_state, written, roles, enc);
      arms.push_back(Term::if_eq(roles.a_start, code, std::move(transition)));
    }
    parts.push_back(
        Term::if_eq(roles.q_start, enc.state_code(state), Term::seq_of(std::move(arms))));
  }
  return Term::seq_of(std::move(parts));
}

Term remove_blanks_term(const RoleSet& roles, const Encoding& enc) {
  std::vector<Term> copy_bodies;
  for (Nat code = 0; code < enc.symbol_count(); ++code) {
    copy_bodies.push_back(Term::push(code, roles.g1));
  }
  Term copy = Term::normal({roles.rgt}, Term::rof_loop(roles.rgt, std::move(copy_bodies)));

  std::vector<Term> erase_bodies;
  for (Nat code = 0; code < enc.symbol_count(); ++code) {
    erase_bodies.push_back(Term::pop(code, roles.rgt));
  }
  std::vector<Term> restore_bodies;
  for (Nat code = 0; code < enc.input_symbol_count(); ++code) {
    restore_bodies.push_back(Term::push(code, roles.rgt));
  }
  restore_bodies.push_back(Term::skip());  // tape-only codes fall through
  Term rebuild = Term::normal(
      {roles.g1}, Term::seq(Term::for_loop(roles.g1, std::move(erase_bodies)),
                            Term::rof_loop(roles.g1, std::move(restore_bodies))));
  return Term::seq(std::move(copy), std::move(rebuild));
}

CompiledProgram compile(const TuringMachine& m) {
  RoleSet roles;
  Encoding enc(m);
  std::set<Nat> codes = tape_codes(enc);
  Term term = Term::seq_of({
      polynomial_term(m.poly, roles.rgt, roles.p),
      Term::push(enc.state_code(m.initial), roles.q),
      // An empty input leaves nothing for the first step to scan; give it
      // one blank, exactly as a right move off the written region does.
      empty_macro(roles.rgt, roles.empty, codes),
      Term::if_eq(roles.empty, 0, Term::push(enc.blank_code(), roles.rgt)),
      Term::normal({roles.p}, Term::for_loop(roles.p, {simulate_term(m, roles, enc)})),
      remove_blanks_term(roles, enc),
  });
  return CompiledProgram{std::move(term), roles, std::move(enc)};
}

namespace {

// Left tape part as stored on lft: head-adjacent character on top.
Stack encode_left(const Encoding& enc, const std::string& left) {
  return enc.encode_string(std::string(left.rbegin(), left.rend()));
}

}  // namespace

bool simulates(const MachineState& state, const Configuration& c, const Encoding& enc,
               const RoleSet& roles) {
  if (!state.sound()) {
    return false;
  }
  if (state.store.get(roles.lft) != encode_left(enc, c.left)) {
    return false;
  }
  if (state.store.get(roles.q).head() != enc.state_code(c.state)) {
    return false;
  }
  std::vector<Nat> rgt = state.store.get(roles.rgt).top_first();
  std::vector<Nat> expected = enc.encode_string(c.right).top_first();
  if (rgt.size() < expected.size()) {
    return false;
  }
  if (!std::equal(expected.begin(), expected.end(), rgt.begin())) {
    return false;
  }
  for (std::size_t i = expected.size(); i < rgt.size(); ++i) {
    if (rgt[i] != enc.blank_code()) {
      return false;
    }
  }
  return true;
}

bool simulates_cleanly(const MachineState& state, const Configuration& c, const Encoding& enc,
                       const RoleSet& roles) {
  return simulates(state, c, enc, roles) &&
         state.store.get(roles.rgt).length() == c.right.size();
}

}  // namespace forno
