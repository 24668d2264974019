#include "argex/explanations.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "argex/errors.hpp"
#include "argex/relations.hpp"

namespace argex {

ArgSet def_by(const Framework& af, ArgIndex a) { return indirect_defenders(af, a); }

ArgSet def_by_in(const Framework& af, ArgIndex a, const ArgSet& extension) {
  require_members(af, extension);
  return intersect(def_by(af, a), extension);
}

ArgSet not_def(const Framework& af, ArgIndex a, const ArgSet& extension) {
  require_members(af, extension);
  const ArgSet hit = attacked_by(af, extension);
  return subtract(indirect_attackers(af, a), hit);
}

ArgSet not_def_intercepted(const Framework& af, ArgIndex a, const ArgSet& extension) {
  require_member(af, a);
  require_members(af, extension);
  const ArgSet hit = attacked_by(af, extension);
  // Backward search over (argument, parity of distance to a); odd states on
  // arguments attacked by the extension are blocked.
  std::vector<std::array<bool, 2>> seen(af.size(), {false, false});
  std::vector<std::pair<ArgIndex, int>> stack;
  auto visit = [&](ArgIndex v, int parity) {
    if (seen[v][parity] || (parity == 1 && hit.contains(v))) return;
    seen[v][parity] = true;
    stack.emplace_back(v, parity);
  };
  for (ArgIndex b : af.attackers(a)) visit(b, 1);
  while (!stack.empty()) {
    auto [v, parity] = stack.back();
    stack.pop_back();
    for (ArgIndex u : af.attackers(v)) visit(u, 1 - parity);
  }
  std::vector<ArgIndex> out;
  for (ArgIndex v = 0; v < af.size(); ++v) {
    if (seen[v][1]) out.push_back(v);
  }
  return ArgSet(std::move(out));
}

std::vector<std::size_t> CredulousCandidates::ranking() const {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return candidates[x].explanation < candidates[y].explanation;
  });
  return order;
}

const ArgSet& chosen(const AcceptanceExplanation& e) {
  if (const auto* set = std::get_if<ArgSet>(&e)) return *set;
  return std::get<CredulousCandidates>(e).pick();
}

std::vector<ArgSet> alternatives(const AcceptanceExplanation& e) {
  if (const auto* set = std::get_if<ArgSet>(&e)) return {*set};
  const auto& cands = std::get<CredulousCandidates>(e);
  std::vector<ArgSet> out;
  for (std::size_t i : cands.ranking()) out.push_back(cands.candidates[i].explanation);
  return out;
}

namespace {

std::string describe(const Evaluation& eval, ArgIndex a) {
  return "argument '" + eval.framework().name(a) + "' under " +
         std::string(to_string(eval.semantics())) + " semantics";
}

}  // namespace

AcceptanceExplanation acc_explanation(const Evaluation& eval, Strategy strategy, ArgIndex a) {
  const Framework& af = eval.framework();
  const AcceptanceStatus st = eval.status(a);
  if (!st.accepted(strategy)) {
    const std::size_t missing = eval.without(a).size();
    throw PreconditionError(
        describe(eval, a) + " is not " + std::string(to_string(strategy)) + "ly accepted: " +
        (strategy == Strategy::Skeptical
             ? "it is missing from " + std::to_string(missing) + " of " +
                   std::to_string(eval.extensions().size()) + " extensions"
             : std::string("no extension contains it")));
  }
  const ArgSet defenders = def_by(af, a);
  if (strategy == Strategy::Skeptical) {
    ArgSet out;
    for (const auto& e : eval.extensions()) out.insert_all(intersect(defenders, e));
    return out;
  }
  CredulousCandidates cands;
  for (const auto& e : eval.with(a)) cands.candidates.push_back({e, intersect(defenders, e)});
  cands.canonical_pick = cands.ranking().front();
  return cands;
}

ArgSet nonacc_explanation(const Evaluation& eval, Strategy strategy, ArgIndex a) {
  const AcceptanceStatus st = eval.status(a);
  if (!st.non_accepted(strategy)) {
    throw PreconditionError(describe(eval, a) + " is not " + std::string(to_string(strategy)) +
                            "ly non-accepted: " +
                            (strategy == Strategy::Skeptical
                                 ? std::string("every extension contains it")
                                 : "it belongs to " + std::to_string(eval.with(a).size()) +
                                       " extensions"));
  }
  const std::vector<ArgSet> scope =
      strategy == Strategy::Skeptical ? eval.without(a) : eval.extensions();
  ArgSet out;
  for (const auto& e : scope) out.insert_all(not_def(eval.framework(), a, e));
  return out;
}

}  // namespace argex
