#include "forno/bennett.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "forno/invert.hpp"

namespace forno {

Term copy_term(const Register& source, const Register& target, Nat code_count) {
  if (source == target) {
    throw std::invalid_argument("copy_term needs distinct source and target");
  }
  if (code_count == 0) {
    throw std::invalid_argument("copy_term needs at least one code");
  }
  std::vector<Term> bodies;
  bodies.reserve(static_cast<std::size_t>(code_count));
  for (Nat code = 0; code < code_count; ++code) {
    bodies.push_back(Term::push(code, target));
  }
  return Term::normal({source}, Term::rof_loop(source, std::move(bodies)));
}

Term bennett_wrap(const Term& t, const Register& io, const Register& target, Nat code_count) {
  if (registers(t).count(target) != 0) {
    throw TargetCollision("copy target '" + target.name + "' occurs in the wrapped term");
  }
  return Term::seq(t, Term::seq(copy_term(io, target, code_count), invert(t)));
}

namespace {

Register fresh_register(const std::string& base, const std::set<Register>& taken) {
  Register candidate{base};
  for (int bump = 2; taken.count(candidate) != 0; ++bump) {
    candidate.name = base + std::to_string(bump);
  }
  return candidate;
}

}  // namespace

TwoWayProgram zero_garbage_compose(const Term& t_f, const Register& io_f, const Term& t_finv,
                                   const Register& io_finv, Nat code_count) {
  std::set<Register> taken = registers(t_f);
  taken.insert(io_f);

  Register fx = fresh_register("fx", taken);
  taken.insert(fx);

  std::map<Register, Register> mapping;
  mapping.emplace(io_finv, fx);
  for (const Register& r : registers(t_finv)) {
    if (r == io_finv) {
      continue;
    }
    Register renamed = fresh_register(r.name + "_inv", taken);
    taken.insert(renamed);
    mapping.emplace(r, renamed);
  }
  Term renamed_finv = rename(t_finv, mapping);

  Term forward = bennett_wrap(t_f, io_f, fx, code_count);
  Term backward = invert(bennett_wrap(renamed_finv, fx, io_f, code_count));
  return TwoWayProgram{Term::seq(std::move(forward), std::move(backward)), io_f, fx};
}

bool check_zero_garbage(const MachineState& state, const Register& out) {
  if (!state.sound()) {
    return false;
  }
  for (const auto& [r, s] : state.store.support()) {
    if (r != out) {
      return false;
    }
  }
  return true;
}

}  // namespace forno
