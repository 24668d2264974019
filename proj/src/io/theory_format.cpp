#include "argex/io/theory_format.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "lexer.hpp"

namespace argex::io {

using aspic::Literal;
using aspic::Rule;
using aspic::RuleKind;
using aspic::Theory;
using detail::Lexer;
using detail::Tok;
using detail::Token;

namespace {

struct Located {
  Literal literal;
  Token at;
};

Located read_literal(Lexer& lex) {
  const Token start = lex.peek();
  bool negated = false;
  while (lex.peek().kind == Tok::Tilde) {
    lex.next();
    negated = !negated;
  }
  Token atom = lex.expect(Tok::Ident, "an atom");
  if (atom.text == "n" && lex.peek().kind == Tok::LParen) {
    lex.next();
    Token rule = lex.expect(Tok::Ident, "a rule name");
    lex.expect(Tok::RParen, "')'");
    return {Literal::naming(rule.text, negated), start};
  }
  return {Literal(atom.text, negated), start};
}

class TheoryParser {
 public:
  explicit TheoryParser(std::string_view text) : lex_(text) {}

  Theory run() {
    while (lex_.peek().kind != Tok::End) statement();
    for (const auto& [l, at] : references_) {
      if (!rule_names_.count(*l.named_rule())) {
        Lexer::fail(at, "'" + l.to_string() + "' refers to an undeclared rule '" +
                            *l.named_rule() + "'");
      }
    }
    aspic::validate(theory_);
    return std::move(theory_);
  }

 private:
  void statement() {
    Token head = lex_.expect(Tok::Ident, "'axiom', 'premise', 'strict' or 'defeasible'");
    if (head.text == "axiom" || head.text == "premise") {
      knowledge(head.text == "axiom");
    } else if (head.text == "strict" || head.text == "defeasible") {
      rule(head.text == "strict" ? RuleKind::Strict : RuleKind::Defeasible);
    } else {
      Lexer::fail(head, "expected 'axiom', 'premise', 'strict' or 'defeasible', found '" +
                            head.text + "'");
    }
  }

  void knowledge(bool axiom) {
    Located l = literal();
    lex_.expect(Tok::Dot, "'.'");
    auto [it, fresh] = kb_.emplace(l.literal, axiom);
    if (!fresh) {
      if (it->second == axiom) {
        Lexer::fail(l.at, std::string(axiom ? "axiom" : "premise") + " '" +
                              l.literal.to_string() + "' declared twice");
      }
      Lexer::fail(l.at, "'" + l.literal.to_string() + "' is declared both as axiom and as premise");
    }
    (axiom ? theory_.axioms : theory_.premises).push_back(l.literal);
  }

  void rule(RuleKind kind) {
    Token name = lex_.expect(Tok::Ident, "a rule name");
    if (!rule_names_.insert(name.text).second) {
      Lexer::fail(name, "duplicate rule name '" + name.text + "'");
    }
    lex_.expect(Tok::Colon, "':'");
    Rule r;
    r.name = name.text;
    r.kind = kind;
    r.antecedents.push_back(literal().literal);
    while (lex_.peek().kind == Tok::Comma) {
      lex_.next();
      r.antecedents.push_back(literal().literal);
    }
    if (kind == RuleKind::Strict) {
      lex_.expect(Tok::Arrow, "'->'");
    } else {
      lex_.expect(Tok::DoubleArrow, "'=>'");
    }
    r.consequent = literal().literal;
    lex_.expect(Tok::Dot, "'.'");
    theory_.rules.push_back(std::move(r));
  }

  Located literal() {
    Located l = read_literal(lex_);
    if (l.literal.named_rule()) references_.emplace_back(l.literal, l.at);
    return l;
  }

  Lexer lex_;
  Theory theory_;
  std::map<Literal, bool> kb_;
  std::set<std::string> rule_names_;
  std::vector<std::pair<Literal, Token>> references_;
};

}  // namespace

Theory parse_theory(std::string_view text) { return TheoryParser(text).run(); }

Literal parse_literal(std::string_view text) {
  Lexer lex(text);
  Located l = read_literal(lex);
  if (lex.peek().kind != Tok::End) {
    Lexer::fail(lex.peek(), "unexpected " + Lexer::describe(lex.peek()) + " after literal");
  }
  return l.literal;
}

std::string print_theory(const Theory& theory) {
  std::string out;
  for (const auto& l : theory.axioms) out += "axiom " + l.to_string() + ".\n";
  for (const auto& l : theory.premises) out += "premise " + l.to_string() + ".\n";
  for (const auto& r : theory.rules) {
    out += (r.defeasible() ? "defeasible " : "strict ") + r.to_string() + ".\n";
  }
  return out;
}

}  // namespace argex::io
