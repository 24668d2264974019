#include "argex/contrastive.hpp"

#include <algorithm>
#include <optional>

#include "argex/relations.hpp"

namespace argex {

std::string_view to_string(Direction d) noexcept {
  return d == Direction::Acceptance ? "acc" : "nonacc";
}

std::string_view to_string(Condition c) noexcept {
  switch (c) {
    case Condition::AcceptanceStatus: return "acceptance-status";
    case Condition::NeverCoexist: return "never-coexist";
    case Condition::ConflictRelevance: return "conflict-relevance";
  }
  return "?";
}

bool ApplicabilityReport::violates(Condition c) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.condition == c; });
}

namespace {

std::string render(const ApplicabilityReport& report) {
  std::string msg = "contrastive explanation not applicable";
  for (const auto& v : report.violations) {
    msg += "; ";
    msg += to_string(v.condition);
    msg += ": ";
    msg += v.detail;
  }
  return msg;
}

std::string quoted(const Framework& af, ArgIndex a) { return "'" + af.name(a) + "'"; }

}  // namespace

std::optional<std::string> status_shortfall(const AcceptanceStatus& st, bool accepted,
                                          Strategy strategy) {
  if (accepted) {
    if (!st.credulously_accepted) return "is not even credulously accepted";
    if (!st.accepted(strategy)) return "is not " + std::string(to_string(strategy)) + "ly accepted";
  } else {
    if (!st.skeptically_non_accepted) return "is not even skeptically non-accepted";
    if (!st.non_accepted(strategy)) {
      return "is not " + std::string(to_string(strategy)) + "ly non-accepted";
    }
  }
  return std::nullopt;
}

ApplicabilityError::ApplicabilityError(ApplicabilityReport report)
    : PreconditionError(render(report)), report_(std::move(report)) {}

ApplicabilityReport check_applicability(const Evaluation& eval, Strategy strategy, ArgIndex fact,
                                        const ArgSet& foils, Direction direction) {
  const Framework& af = eval.framework();
  require_member(af, fact);
  require_members(af, foils);
  if (foils.empty()) throw InputError("the foil set is empty");

  ApplicabilityReport report;
  const bool fact_accepted = direction == Direction::Acceptance;
  if (auto problem = status_shortfall(eval.status(fact), fact_accepted, strategy)) {
    report.violations.push_back({Condition::AcceptanceStatus, "fact " + quoted(af, fact) + " " + *problem});
  }
  const auto fact_rel = indirect_relations(af, fact);
  for (ArgIndex foil : foils) {
    if (auto problem = status_shortfall(eval.status(foil), !fact_accepted, dagger(strategy))) {
      report.violations.push_back({Condition::AcceptanceStatus, "foil " + quoted(af, foil) + " " + *problem});
    }
    for (const auto& e : eval.extensions()) {
      if (e.contains(fact) && e.contains(foil)) {
        report.violations.push_back({Condition::NeverCoexist, "fact " + quoted(af, fact) + " and foil " +
                                                                  quoted(af, foil) +
                                                                  " share an extension"});
        break;
      }
    }
    const bool foil_rel = !af.self_attacking(foil) && fact_rel.attackers.contains(foil);
    const bool fact_rel_foil =
        !af.self_attacking(fact) && indirect_relations(af, foil).attackers.contains(fact);
    if (!foil_rel && !fact_rel_foil) {
      report.violations.push_back({Condition::ConflictRelevance,
                                   "neither of fact " + quoted(af, fact) + " and foil " +
                                       quoted(af, foil) + " is conflict-relevant for the other" +
                                       (af.self_attacking(foil) ? " (the foil attacks itself)" : "")});
    }
  }
  return report;
}

ContrastiveResult cont_acc(const Evaluation& eval, Strategy strategy, ArgIndex fact,
                           const ArgSet& foils) {
  auto report = check_applicability(eval, strategy, fact, foils, Direction::Acceptance);
  if (!report.ok()) throw ApplicabilityError(std::move(report));
  std::vector<std::vector<ArgSet>> foil_sides;
  for (ArgIndex foil : foils) foil_sides.push_back({nonacc_explanation(eval, dagger(strategy), foil)});
  return combine_contrast(alternatives(acc_explanation(eval, strategy, fact)), foil_sides);
}

ContrastiveResult cont_nonacc(const Evaluation& eval, Strategy strategy, ArgIndex fact,
                              const ArgSet& foils) {
  auto report = check_applicability(eval, strategy, fact, foils, Direction::NonAcceptance);
  if (!report.ok()) throw ApplicabilityError(std::move(report));
  std::vector<std::vector<ArgSet>> foil_sides;
  for (ArgIndex foil : foils) foil_sides.push_back(alternatives(acc_explanation(eval, dagger(strategy), foil)));
  return combine_contrast(std::vector<ArgSet>{nonacc_explanation(eval, strategy, fact)}, foil_sides);
}

ArgSet derive_foil(const Framework& af, ArgIndex a) {
  require_member(af, a);
  return ArgSet(af.attackers(a));
}

}  // namespace argex
