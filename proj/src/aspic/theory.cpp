#include "argex/aspic/theory.hpp"

#include <algorithm>
#include <set>

#include "argex/errors.hpp"
#include "argex/framework.hpp"

namespace argex::aspic {

namespace {

std::optional<std::string_view> rule_in_atom(std::string_view atom) {
  if (atom.size() < 4 || atom.substr(0, 2) != "n(" || atom.back() != ')') return std::nullopt;
  return atom.substr(2, atom.size() - 3);
}

}  // namespace

Literal::Literal(std::string atom, bool negated) : atom_(std::move(atom)), negated_(negated) {
  if (is_valid_identifier(atom_)) return;
  const auto rule = rule_in_atom(atom_);
  if (!rule || !is_valid_identifier(*rule)) throw InputError("invalid atom '" + atom_ + "'");
}

Literal Literal::naming(std::string_view rule, bool negated) {
  return Literal("n(" + std::string(rule) + ")", negated);
}

std::optional<std::string> Literal::named_rule() const {
  if (is_valid_identifier(atom_)) return std::nullopt;
  return std::string(*rule_in_atom(atom_));
}

std::string Literal::to_string() const { return negated_ ? "~" + atom_ : atom_; }

std::string Rule::to_string() const {
  std::string out = name + ": ";
  for (std::size_t i = 0; i < antecedents.size(); ++i) {
    if (i > 0) out += ", ";
    out += antecedents[i].to_string();
  }
  out += defeasible() ? " => " : " -> ";
  out += consequent.to_string();
  return out;
}

bool Theory::is_axiom(const Literal& l) const {
  return std::find(axioms.begin(), axioms.end(), l) != axioms.end();
}

const Rule* Theory::find_rule(std::string_view name) const {
  auto it = std::find_if(rules.begin(), rules.end(), [&](const Rule& r) { return r.name == name; });
  return it == rules.end() ? nullptr : &*it;
}

void validate(const Theory& theory) {
  std::set<std::string> names;
  for (const auto& r : theory.rules) {
    if (!is_valid_identifier(r.name)) throw InputError("invalid rule name '" + r.name + "'");
    if (!names.insert(r.name).second) throw InputError("duplicate rule name '" + r.name + "'");
    if (r.antecedents.empty()) throw InputError("rule '" + r.name + "' has no antecedents");
  }
  std::set<Literal> axioms;
  for (const auto& l : theory.axioms) {
    if (!axioms.insert(l).second) throw InputError("duplicate axiom '" + l.to_string() + "'");
  }
  std::set<Literal> premises;
  for (const auto& l : theory.premises) {
    if (!premises.insert(l).second) throw InputError("duplicate premise '" + l.to_string() + "'");
    if (axioms.count(l)) {
      throw InputError("'" + l.to_string() + "' is declared both as axiom and as premise");
    }
  }
  auto check_reference = [&](const Literal& l) {
    if (auto rule = l.named_rule(); rule && !names.count(*rule)) {
      throw InputError("'" + l.to_string() + "' refers to an undeclared rule '" + *rule + "'");
    }
  };
  for (const auto& l : theory.axioms) check_reference(l);
  for (const auto& l : theory.premises) check_reference(l);
  for (const auto& r : theory.rules) {
    for (const auto& l : r.antecedents) check_reference(l);
    check_reference(r.consequent);
  }
}

}  // namespace argex::aspic
