#pragma once

#include <string>
#include <string_view>

#include "argex/framework.hpp"

namespace argex::io {

/// Parses the APX-style format: `arg(<id>).` and `att(<id>,<id>).`
/// statements, `%` comments, free whitespace. Arguments must be declared
/// before they are attacked. Throws ParseError (with line and column) on
/// malformed text, undeclared or duplicate arguments and duplicate attacks.
[[nodiscard]] Framework parse_af(std::string_view text);

/// One `arg` line per argument, then one `att` line per attack, both in
/// canonical order. parse_af(print_af(af)) == af.
[[nodiscard]] std::string print_af(const Framework& af);

}  // namespace argex::io
