#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argex/aspic/theory.hpp"
#include "argex/framework.hpp"
#include "argex/sorted_set.hpp"

namespace argex::aspic {

using LiteralSet = SortedSet<Literal>;

/// One constructed argument. Indices (`direct_subs`, `subs`) refer to the
/// vector returned by build_arguments.
struct StructuredArgument {
  std::string id;
  Literal conclusion;
  /// Index into Theory::rules; empty for premise arguments.
  std::optional<std::size_t> top_rule;
  /// Immediate sub-arguments, one per antecedent of the top rule.
  std::vector<std::size_t> direct_subs;
  /// All sub-arguments, the argument itself included.
  SortedSet<std::size_t> subs;
  LiteralSet premises;
  std::size_t height = 0;

  [[nodiscard]] bool is_premise() const noexcept { return !top_rule.has_value(); }
};

/// Upper bound on the number of constructed arguments.
inline constexpr std::size_t kMaxArguments = 100000;

/// Every non-circular argument of `theory`: no proper sub-argument has the
/// same conclusion as the argument. Premise arguments come first and are
/// named A1, A2, ... (axioms, then premises, in declaration order). Rule
/// arguments follow as B1, B2, ..., ordered by top rule declaration and then
/// by their sub-arguments. Validates the theory; throws InputError when more
/// than kMaxArguments arguments arise.
[[nodiscard]] std::vector<StructuredArgument> build_arguments(const Theory& theory);

enum class AttackKind { Undercut, Rebut, Undermine };

[[nodiscard]] std::string_view to_string(AttackKind k) noexcept;

/// `attacker` attacks `target`. Undercuts and rebuts record the attacked
/// sub-argument in `on_argument`, undermines the attacked premise in
/// `on_premise`.
struct Attack {
  std::size_t attacker = 0;
  std::size_t target = 0;
  AttackKind kind = AttackKind::Rebut;
  std::optional<std::size_t> on_argument;
  std::optional<Literal> on_premise;

  friend bool operator==(const Attack&, const Attack&) = default;
};

/// Every undercut, rebut and undermine between `args`, ordered by attacker,
/// target, kind and attacked part. One pair may appear with several kinds.
[[nodiscard]] std::vector<Attack> compute_attacks(const Theory& theory,
                                                  const std::vector<StructuredArgument>& args);

/// A theory together with its arguments, attacks and derived abstract
/// framework. The framework's arguments are named by argument id.
class StructuredFramework {
 public:
  [[nodiscard]] static StructuredFramework derive(Theory theory);

  [[nodiscard]] const Theory& theory() const noexcept { return theory_; }
  [[nodiscard]] const std::vector<StructuredArgument>& arguments() const noexcept { return args_; }
  [[nodiscard]] const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  [[nodiscard]] const Framework& framework() const noexcept { return af_; }

  /// Framework index of argument `i`, and back.
  [[nodiscard]] ArgIndex node_of(std::size_t i) const { return node_of_.at(i); }
  [[nodiscard]] std::size_t argument_of(ArgIndex node) const { return argument_of_.at(node); }
  [[nodiscard]] const StructuredArgument& argument_at(ArgIndex node) const {
    return args_.at(argument_of(node));
  }

  /// Framework indices of the arguments concluding `l`.
  [[nodiscard]] ArgSet arguments_for(const Literal& l) const;
  [[nodiscard]] LiteralSet conclusions() const;
  /// The conclusions of the framework nodes in `s`.
  [[nodiscard]] LiteralSet conclusions_of(const ArgSet& s) const;
  /// The union of the premises of the framework nodes in `s`.
  [[nodiscard]] LiteralSet premises_of(const ArgSet& s) const;

 private:
  Theory theory_;
  std::vector<StructuredArgument> args_;
  std::vector<Attack> attacks_;
  Framework af_;
  std::vector<ArgIndex> node_of_;
  std::vector<std::size_t> argument_of_;
};

}  // namespace argex::aspic
