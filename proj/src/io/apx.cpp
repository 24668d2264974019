#include "argex/io/apx.hpp"

#include <set>
#include <utility>
#include <vector>

#include "lexer.hpp"

namespace argex::io {

using detail::Lexer;
using detail::Tok;
using detail::Token;

Framework parse_af(std::string_view text) {
  Lexer lex(text);
  std::vector<std::string> args;
  std::set<std::string> declared;
  std::vector<AttackPair> attacks;
  std::set<AttackPair> seen;

  auto declared_id = [&]() {
    Token id = lex.expect(Tok::Ident, "an argument name");
    if (!declared.count(id.text)) Lexer::fail(id, "undeclared argument '" + id.text + "'");
    return id;
  };

  while (lex.peek().kind != Tok::End) {
    Token head = lex.expect(Tok::Ident, "'arg' or 'att'");
    if (head.text == "arg") {
      lex.expect(Tok::LParen, "'('");
      Token id = lex.expect(Tok::Ident, "an argument name");
      lex.expect(Tok::RParen, "')'");
      lex.expect(Tok::Dot, "'.'");
      if (!declared.insert(id.text).second) {
        Lexer::fail(id, "duplicate argument '" + id.text + "'");
      }
      args.push_back(id.text);
    } else if (head.text == "att") {
      lex.expect(Tok::LParen, "'('");
      Token from = declared_id();
      lex.expect(Tok::Comma, "','");
      Token to = declared_id();
      lex.expect(Tok::RParen, "')'");
      lex.expect(Tok::Dot, "'.'");
      AttackPair pair{from.text, to.text};
      if (!seen.insert(pair).second) {
        Lexer::fail(head, "duplicate attack (" + from.text + "," + to.text + ")");
      }
      attacks.push_back(std::move(pair));
    } else {
      Lexer::fail(head, "expected 'arg' or 'att', found '" + head.text + "'");
    }
  }
  return Framework(std::move(args), attacks);
}

std::string print_af(const Framework& af) {
  std::string out;
  for (const auto& name : af.names()) out += "arg(" + name + ").\n";
  for (const auto& [from, to] : af.attack_pairs()) {
    out += "att(" + af.name(from) + "," + af.name(to) + ").\n";
  }
  return out;
}

}  // namespace argex::io
