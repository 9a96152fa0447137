#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "forno/syntax.hpp"

namespace forno {

struct ParseError : std::runtime_error {
  ParseError(SourceSpan where, const std::string& message)
      : std::runtime_error(message), span(where) {}
  SourceSpan span;
};

/// Parses a source text into a raw term.
///
/// Keywords SKIP, PUSH, POP, IF, NORMAL, FOR, ROF are case-sensitive and
/// reserved; `;` sequences with lowest precedence and associates to the
/// right; naturals are decimal; `#` comments to end of line; whitespace is
/// insignificant between tokens.
Term parse(std::string_view source);

}  // namespace forno
