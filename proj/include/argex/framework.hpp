#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argex/sorted_set.hpp"

namespace argex {

/// Position of an argument inside a Framework. Arguments are indexed in
/// lexicographic order of their names, so ordering indices orders names.
using ArgIndex = std::size_t;

/// A set of arguments of one framework (an extension, an explanation, ...).
using ArgSet = SortedSet<ArgIndex>;

using AttackPair = std::pair<std::string, std::string>;

/// True for non-empty tokens made of ASCII letters, digits and underscores.
[[nodiscard]] bool is_valid_identifier(std::string_view name) noexcept;

/// A finite abstract argumentation framework: arguments plus a directed
/// attack relation. Immutable once built.
class Framework {
 public:
  Framework() = default;

  /// Throws InputError on invalid or duplicate names, on attacks naming
  /// undeclared arguments, and on duplicate attack pairs. Self-attacks are
  /// allowed.
  Framework(std::vector<std::string> arguments, const std::vector<AttackPair>& attacks);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] std::size_t attack_count() const noexcept { return attack_count_; }

  [[nodiscard]] const std::string& name(ArgIndex a) const { return names_.at(a); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  [[nodiscard]] std::optional<ArgIndex> find(std::string_view name) const;
  /// Like find(), but throws InputError for unknown names.
  [[nodiscard]] ArgIndex index(std::string_view name) const;

  /// Direct attackers of `a`, ascending.
  [[nodiscard]] const std::vector<ArgIndex>& attackers(ArgIndex a) const { return attackers_.at(a); }
  /// Arguments directly attacked by `a`, ascending.
  [[nodiscard]] const std::vector<ArgIndex>& targets(ArgIndex a) const { return targets_.at(a); }

  [[nodiscard]] bool attacks(ArgIndex from, ArgIndex to) const;
  [[nodiscard]] bool self_attacking(ArgIndex a) const { return attacks(a, a); }

  /// All attack pairs, ordered by (attacker, target).
  [[nodiscard]] std::vector<std::pair<ArgIndex, ArgIndex>> attack_pairs() const;

  [[nodiscard]] ArgSet all() const;
  /// Resolves names to a set; throws InputError for unknown names.
  [[nodiscard]] ArgSet set_of(std::span<const std::string> names) const;
  [[nodiscard]] std::vector<std::string> names_of(const ArgSet& s) const;

  friend bool operator==(const Framework&, const Framework&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<ArgIndex>> attackers_;
  std::vector<std::vector<ArgIndex>> targets_;
  std::size_t attack_count_ = 0;
};

}  // namespace argex
