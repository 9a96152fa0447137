#pragma once

#include <random>
#include <set>
#include <vector>

#include "forno/state.hpp"
#include "forno/syntax.hpp"

namespace forno::testing {

using Rng = std::mt19937_64;

/// Any raw term: iterations and NORMAL blocks land anywhere, guards may be
/// written. Around `depth` levels deep over a small fixed register pool.
Term random_raw_term(Rng& rng, int depth);

/// A term that passes the validity checker: iterations only under NORMAL
/// and led by normal registers, no writes to enclosing guards or normals.
Term random_valid_term(Rng& rng, int depth);

/// Store over the generator register pool plus a spare, counter 0 with
/// probability ~0.7 and small positive otherwise.
MachineState random_state(Rng& rng);
MachineState random_sound_state(Rng& rng);

const std::vector<Register>& register_pool();

}  // namespace forno::testing
