#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "forno/syntax.hpp"

namespace forno {

enum class ViolationKind {
  IterationOutsideNormal,   // FOR/ROF not inside a NORMAL body
  NestedNormal,             // NORMAL inside a NORMAL body
  WriteToGuard,             // PUSH/POP of a register guarding an enclosing IF/FOR/ROF
  WriteToNormal,            // PUSH/POP of a register declared normal for the enclosing block
  IterationLedByNonNormal,  // FOR/ROF guard not in the enclosing NORMAL list
};

struct Violation {
  ViolationKind kind;
  std::optional<Register> reg;
  SourceSpan span;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Targets of PUSH/POP anywhere in t.
std::set<Register> written_registers(const Term& t);

/// All membership violations of a raw term, in source order. Empty result
/// means t is a well-formed program: iterations occur only under NORMAL and
/// are led by normal registers, NORMAL blocks do not nest, and no guard or
/// normal register is written in the bodies it governs.
std::vector<Violation> check(const Term& t);

inline bool is_valid(const Term& t) { return check(t).empty(); }

std::string describe(const Violation& v);

}  // namespace forno
