#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argex::aspic {

/// A propositional literal under classical negation. The atom is either a
/// plain identifier or a rule-name term `n(<rule>)`. Double negation is not
/// representable: negating a negative literal gives the positive one.
class Literal {
 public:
  Literal() = default;
  /// Throws InputError when `atom` is neither an identifier nor `n(<id>)`.
  explicit Literal(std::string atom, bool negated = false);
  [[nodiscard]] static Literal naming(std::string_view rule, bool negated = false);

  [[nodiscard]] const std::string& atom() const noexcept { return atom_; }
  [[nodiscard]] bool negated() const noexcept { return negated_; }
  [[nodiscard]] Literal negation() const { return Literal(atom_, !negated_, Trusted{}); }
  /// The rule named by an `n(<rule>)` atom.
  [[nodiscard]] std::optional<std::string> named_rule() const;
  /// `p`, `~p`, `n(d1)` or `~n(d1)`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend std::strong_ordering operator<=>(const Literal&, const Literal&) = default;

 private:
  struct Trusted {};
  Literal(std::string atom, bool negated, Trusted) : atom_(std::move(atom)), negated_(negated) {}

  std::string atom_;
  bool negated_ = false;
};

enum class RuleKind { Strict, Defeasible };

struct Rule {
  std::string name;
  RuleKind kind = RuleKind::Defeasible;
  std::vector<Literal> antecedents;
  Literal consequent;

  [[nodiscard]] bool defeasible() const noexcept { return kind == RuleKind::Defeasible; }
  /// `d1: a, b => c` or `s1: a -> c`.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Rule&, const Rule&) = default;
};

/// Knowledge base (axioms and ordinary premises) plus rules, each in
/// declaration order.
struct Theory {
  std::vector<Literal> axioms;
  std::vector<Literal> premises;
  std::vector<Rule> rules;

  [[nodiscard]] bool is_axiom(const Literal& l) const;
  [[nodiscard]] const Rule* find_rule(std::string_view name) const;

  friend bool operator==(const Theory&, const Theory&) = default;
};

/// Throws InputError on invalid rule names, duplicate rule names, repeated
/// knowledge-base entries, a literal that is both axiom and premise, a rule
/// without antecedents, or an `n(r)` that names no rule.
void validate(const Theory& theory);

}  // namespace argex::aspic
