#pragma once

#include "forno/syntax.hpp"

namespace forno {

/// Syntax-directed inversion. Swaps PUSH with POP and FOR with ROF,
/// reverses sequences, and recurses into bodies (body order preserved).
/// An involution on all raw terms; for valid programs T, running T then
/// invert(T) restores the initial state exactly.
Term invert(const Term& t);

}  // namespace forno
