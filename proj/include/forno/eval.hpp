#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forno/state.hpp"
#include "forno/syntax.hpp"

namespace forno {

// One derivation-rule application. `rule` is one of: skip, seq, pop, push,
// if-eq, if-neq, for, rof, n, base, step. For push/pop the register and its
// stack after the operation are recorded.
struct TraceEvent {
  std::string_view rule;
  SourceSpan span;
  std::optional<Register> reg;
  std::optional<Stack> reg_stack;
  Nat counter = 0;  // after the rule applied
};

struct EvalOptions {
  bool trace = false;
};

struct EvalResult {
  MachineState final;
  // Applications of skip/push/pop/if-eq/if-neq/step; the structural rules
  // seq/for/rof/n/base are free.
  Nat steps = 0;
  std::optional<std::vector<TraceEvent>> trace;
};

/// Total evaluator over raw terms. Never fails: a pop or push that cannot
/// happen is absorbed by the counter. Runs on an explicit work list, so
/// term depth and iteration counts do not consume host stack.
EvalResult eval(const Term& t, MachineState initial, const EvalOptions& opts = {});

/// The iteration fold: consume `snapshot` top-first, dispatching element i
/// to bodies[min(i, bodies.size()-1)].
MachineState eval_snapshot(const Stack& snapshot, const std::vector<Term>& bodies,
                           MachineState state);

// `<rule>\t<span>\t<register>=<stack>\tcounter=<c>`
std::string format_trace_line(const TraceEvent& event);

}  // namespace forno
