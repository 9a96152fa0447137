#pragma once

#include <random>
#include <string>
#include <vector>

#include "forno/compile.hpp"
#include "forno/state.hpp"
#include "forno/syntax.hpp"
#include "forno/turing.hpp"

namespace forno::testing {

// Machine descriptions shipped under machines/.
TuringMachine load_machine(const std::string& name);  // "swap", "reverse", ...
std::string machine_path(const std::string& name);

// All binary strings of length <= max_length, shortest first.
std::vector<std::string> binary_strings_up_to(std::size_t max_length);

// Every configuration a machine passes through on the given inputs,
// including initial and halting ones, deduplicated.
std::vector<Configuration> reachable_configurations(const TuringMachine& m,
                                                    const std::vector<std::string>& inputs);

/// A state representing configuration c the way a compiled run would: lft
/// spelled head-outward, the state code on q, rgt followed by
/// `extra_blanks` blank codes (at least one when the right part is empty,
/// matching the compiled invariant that rgt is non-empty until the
/// machine halts).
MachineState simulation_state(const Configuration& c, const Encoding& enc, const RoleSet& roles,
                              std::size_t extra_blanks = 0);

// Counts of each node kind in a term.
struct NodeCounts {
  std::size_t skips = 0, pushes = 0, pops = 0, seqs = 0, ifs = 0, normals = 0, fors = 0, rofs = 0;
};
NodeCounts count_nodes(const Term& t);

}  // namespace forno::testing
