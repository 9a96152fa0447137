#pragma once

#include <string>

#include "forno/syntax.hpp"

namespace forno {

/// Deterministic pretty-printer; parse(render(t)) == t for every term.
std::string render(const Term& t);

}  // namespace forno
