#include "argex/relations.hpp"

#include <array>
#include <vector>

#include "argex/semantics.hpp"

namespace argex {

IndirectRelations indirect_relations(const Framework& af, ArgIndex target) {
  require_member(af, target);
  // seen[v][p]: some walk from v reaches the target with length parity p
  // (0 = even, 1 = odd) and length >= 1.
  std::vector<std::array<bool, 2>> seen(af.size(), {false, false});
  std::vector<std::pair<ArgIndex, int>> stack;
  for (ArgIndex b : af.attackers(target)) {
    if (!seen[b][1]) {
      seen[b][1] = true;
      stack.emplace_back(b, 1);
    }
  }
  while (!stack.empty()) {
    auto [v, parity] = stack.back();
    stack.pop_back();
    const int next = 1 - parity;
    for (ArgIndex u : af.attackers(v)) {
      if (!seen[u][next]) {
        seen[u][next] = true;
        stack.emplace_back(u, next);
      }
    }
  }
  std::vector<ArgIndex> att, def;
  for (ArgIndex v = 0; v < af.size(); ++v) {
    if (seen[v][1]) att.push_back(v);
    if (seen[v][0]) def.push_back(v);
  }
  return {ArgSet(std::move(att)), ArgSet(std::move(def))};
}

ArgSet indirect_attackers(const Framework& af, ArgIndex target) {
  return indirect_relations(af, target).attackers;
}

ArgSet indirect_defenders(const Framework& af, ArgIndex target) {
  return indirect_relations(af, target).defenders;
}

std::string_view to_string(Relevance r) noexcept {
  switch (r) {
    case Relevance::NotRelevant: return "not-relevant";
    case Relevance::ConflictRelevant: return "conflict-relevant";
    case Relevance::DefendingRelevant: return "defending-relevant";
    case Relevance::Both: return "conflict-and-defending-relevant";
  }
  return "?";
}

Relevance relevance(const Framework& af, ArgIndex a, ArgIndex b) {
  require_member(af, a);
  if (af.self_attacking(a)) return Relevance::NotRelevant;
  const auto rel = indirect_relations(af, b);
  const bool attacks = rel.attackers.contains(a);
  const bool defends = rel.defenders.contains(a);
  if (attacks && defends) return Relevance::Both;
  if (attacks) return Relevance::ConflictRelevant;
  if (defends) return Relevance::DefendingRelevant;
  return Relevance::NotRelevant;
}

bool conflict_relevant(const Framework& af, ArgIndex a, ArgIndex b) {
  const Relevance r = relevance(af, a, b);
  return r == Relevance::ConflictRelevant || r == Relevance::Both;
}

bool defending_relevant(const Framework& af, ArgIndex a, ArgIndex b) {
  const Relevance r = relevance(af, a, b);
  return r == Relevance::DefendingRelevant || r == Relevance::Both;
}

}  // namespace argex
