#pragma once

#include <string>
#include <string_view>

#include "argex/aspic/theory.hpp"

namespace argex::io {

/// Parses a theory:
///
///   axiom <lit>.
///   premise <lit>.
///   strict <name>: <lit>{,<lit>} -> <lit>.
///   defeasible <name>: <lit>{,<lit>} => <lit>.
///
/// where a literal is `[~]atom` or `[~]n(<rule>)`. Repeated `~` cancel out.
/// Throws ParseError on malformed text, duplicate rule names, repeated
/// declarations, axiom/premise overlap and `n(r)` naming no rule.
[[nodiscard]] aspic::Theory parse_theory(std::string_view text);

/// Parses a single literal such as `~n(d1)`. Throws ParseError.
[[nodiscard]] aspic::Literal parse_literal(std::string_view text);

/// Canonical text of a theory. parse_theory(print_theory(t)) == t.
[[nodiscard]] std::string print_theory(const aspic::Theory& theory);

}  // namespace argex::io
