#pragma once

#include <string_view>

#include "argex/framework.hpp"

namespace argex {

/// Indirect attack and defence towards one target argument.
///
/// `b` attacks the target iff there is a directed attack walk of odd length
/// from `b` to the target, and defends it iff there is one of even length
/// >= 2. Walks may revisit vertices, so on odd cycles an argument can be both.
struct IndirectRelations {
  ArgSet attackers;
  ArgSet defenders;
};

/// Parity reachability over the (argument, parity) product graph, walking
/// attack edges backwards from `target`. Linear in the size of the framework.
[[nodiscard]] IndirectRelations indirect_relations(const Framework& af, ArgIndex target);

[[nodiscard]] ArgSet indirect_attackers(const Framework& af, ArgIndex target);
[[nodiscard]] ArgSet indirect_defenders(const Framework& af, ArgIndex target);

enum class Relevance { NotRelevant, ConflictRelevant, DefendingRelevant, Both };

[[nodiscard]] std::string_view to_string(Relevance r) noexcept;

/// How `a` bears on `b`. Self-attacking arguments are never relevant.
[[nodiscard]] Relevance relevance(const Framework& af, ArgIndex a, ArgIndex b);

[[nodiscard]] bool conflict_relevant(const Framework& af, ArgIndex a, ArgIndex b);
[[nodiscard]] bool defending_relevant(const Framework& af, ArgIndex a, ArgIndex b);

}  // namespace argex
