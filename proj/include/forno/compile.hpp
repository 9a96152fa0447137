#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "forno/state.hpp"
#include "forno/syntax.hpp"
#include "forno/turing.hpp"

namespace forno {

/// Register assignment for compiled programs. rgt/lft/q mirror the machine
/// configuration, p drives the main iteration, and the rest accumulate
/// garbage or act as scratch.
struct RoleSet {
  Register rgt{"rgt"};
  Register lft{"lft"};
  Register q{"q"};
  Register p{"p"};
  Register g{"g"};
  Register g1{"g1"};
  Register q_start{"qStart"};
  Register a_start{"aStart"};
  Register empty{"empty"};
  Register empty_t{"emptyT"};
  Register scratch{"t"};

  std::vector<std::pair<std::string, Register>> as_table() const;
};

struct CompiledProgram {
  Term term;
  RoleSet roles;
  Encoding encoding;
};

/// NORMAL source { FOR source { ... FOR source { PUSH[1] target } } },
/// `degree` loops deep: grows target by length(source)^degree.
Term pow_term(Nat degree, const Register& source, const Register& target);

/// Grows target by p(length(source)) ones.
Term polynomial_term(const Polynomial& p, const Register& source, const Register& target);

/// Emptiness probe: pushes 1 on `verdict` if x is non-empty, else 0. x is
/// only read; the pushed element is the macro's garbage. At run time a
/// non-empty x must have its head in `codes`.
Term empty_macro(const Register& x, const Register& verdict, const std::set<Nat>& codes);

/// Moves the top of x onto y when x is non-empty, else does nothing.
/// `scratch` must be empty at entry and is empty again at exit; `verdict`
/// gains one garbage element. All four registers must be distinct.
Term to_macro(const Register& x, const Register& y, const std::set<Nat>& codes,
              const Register& scratch, const Register& verdict);

// One machine transition: set the state, replace the scanned symbol, move
// the head. The left move pulls the top of lft onto rgt when lft is
// non-empty; the right move pushes the written symbol onto lft and
// materializes a blank when rgt runs out.
Term transition_l(Nat next_state, Nat write_symbol, const RoleSet& roles, const Encoding& enc);
Term transition_r(Nat next_state, Nat write_symbol, const RoleSet& roles, const Encoding& enc);

/// One simulated machine step: snapshot the current state and scanned
/// symbol onto qStart/aStart, then dispatch the matching transition. The
/// snapshot chain covers the halting state (with no dispatch arm), so a
/// halted configuration is a fixed point. Contains no iterations and never
/// writes p.
Term simulate_term(const TuringMachine& m, const RoleSet& roles, const Encoding& enc);

/// Copies rgt into g1, pops rgt empty, then pushes back only input-symbol
/// codes (in order). Clears the blanks the simulation parked on rgt; g1
/// keeps the pre-image as garbage.
Term remove_blanks_term(const RoleSet& roles, const Encoding& enc);

/// Whole-machine compilation: build the step budget from the input length,
/// enter the initial state, materialize a blank for the empty input, run
/// the simulation budget many times, then clean the output register.
CompiledProgram compile(const TuringMachine& m);

/// Does `state` represent configuration c? Requires a sound state, lft
/// spelling the left tape part (head-adjacent character on top), the
/// current state code on top of q, and rgt spelling the right part
/// followed by any number of blank codes.
bool simulates(const MachineState& state, const Configuration& c, const Encoding& enc,
               const RoleSet& roles);

/// As simulates, but with no trailing blank codes on rgt.
bool simulates_cleanly(const MachineState& state, const Configuration& c, const Encoding& enc,
                       const RoleSet& roles);

}  // namespace forno
