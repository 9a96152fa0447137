#pragma once

#include <stdexcept>

#include "forno/state.hpp"
#include "forno/syntax.hpp"

namespace forno {

struct TargetCollision : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// NORMAL source { ROF source {PUSH[0] target} ... {PUSH[code_count-1] target} }:
/// appends a same-order copy of source on top of target. Every element of
/// source must be below code_count at run time.
Term copy_term(const Register& source, const Register& target, Nat code_count);

/// Compute, copy the result, uncompute: t ; COPY(io, target) ; invert(t).
/// Leaves io and target holding input and result and restores every other
/// register. Throws TargetCollision if target occurs in t.
Term bennett_wrap(const Term& t, const Register& io, const Register& target, Nat code_count);

struct TwoWayProgram {
  Term term;
  Register input;   // io register of the forward term
  Register output;  // fresh register holding the result
};

/// Zero-garbage composition of a function and its inverse: wrap both terms
/// with bennett_wrap and run the inverse wrap backwards. Registers of the
/// inverse term are renamed apart from the forward term's; its io register
/// becomes the fresh output register. Run on a store holding only the
/// input, the result holds only the output.
TwoWayProgram zero_garbage_compose(const Term& t_f, const Register& io_f, const Term& t_finv,
                                   const Register& io_finv, Nat code_count);

/// True iff the counter is 0 and every register except `out` is empty.
bool check_zero_garbage(const MachineState& state, const Register& out);

}  // namespace forno
