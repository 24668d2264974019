#include "argex/aspic/formula.hpp"

#include <algorithm>
#include <numeric>

#include "argex/errors.hpp"
#include "argex/explanations.hpp"
#include "argex/relations.hpp"

namespace argex::aspic {

std::string_view to_string(Presentation p) noexcept {
  return p == Presentation::Identity ? "id" : "prem";
}

std::optional<Presentation> parse_presentation(std::string_view text) noexcept {
  if (text == "id") return Presentation::Identity;
  if (text == "prem") return Presentation::Premises;
  return std::nullopt;
}

StructuredEvaluation::StructuredEvaluation(StructuredFramework sf, Semantics sem)
    : sf_(std::make_shared<const StructuredFramework>(std::move(sf))),
      eval_(sf_->framework(), sem) {}

PresentedSet StructuredEvaluation::present(const ArgSet& s, Presentation p) const {
  std::vector<std::string> out;
  if (p == Presentation::Identity) {
    for (ArgIndex n : s) out.push_back(sf_->framework().name(n));
  } else {
    for (const auto& l : sf_->premises_of(s)) out.push_back(l.to_string());
  }
  return PresentedSet(std::move(out));
}

namespace {

std::string quoted(const Literal& l) { return "'" + l.to_string() + "'"; }

ArgSet concluding(const StructuredEvaluation& se, const Literal& phi) {
  ArgSet args = se.structure().arguments_for(phi);
  if (args.empty()) {
    throw PreconditionError("no argument concludes " + quoted(phi));
  }
  return args;
}

AcceptanceStatus status_of(const StructuredEvaluation& se, const ArgSet& args) {
  const auto& exts = se.evaluation().extensions();
  if (exts.empty()) {
    throw PreconditionError("acceptance is undefined: the framework has no " +
                            std::string(to_string(se.evaluation().semantics())) + " extensions");
  }
  const auto with = static_cast<std::size_t>(
      std::count_if(exts.begin(), exts.end(), [&](const ArgSet& e) { return e.intersects(args); }));
  return status_from_counts(with, exts.size() - with);
}

std::string describe(const StructuredEvaluation& se, const Literal& phi) {
  return "literal " + quoted(phi) + " under " +
         std::string(to_string(se.evaluation().semantics())) + " semantics";
}

}  // namespace

std::optional<AcceptanceStatus> formula_status(const StructuredEvaluation& se, const Literal& phi) {
  const ArgSet args = se.structure().arguments_for(phi);
  if (args.empty()) return std::nullopt;
  return status_of(se, args);
}

std::vector<PresentedSet> FormulaCandidates::alternatives() const {
  std::vector<PresentedSet> out;
  for (const auto& c : candidates) out.push_back(c.explanation);
  canonicalize(out);
  return out;
}

const PresentedSet& chosen(const FormulaAcceptance& e) {
  if (const auto* set = std::get_if<PresentedSet>(&e)) return *set;
  return std::get<FormulaCandidates>(e).pick();
}

std::vector<PresentedSet> alternatives(const FormulaAcceptance& e) {
  if (const auto* set = std::get_if<PresentedSet>(&e)) return {*set};
  return std::get<FormulaCandidates>(e).alternatives();
}

FormulaAcceptance formula_acc_explanation(const StructuredEvaluation& se, Strategy strategy,
                                          const Literal& phi, Presentation p) {
  const ArgSet args = concluding(se, phi);
  if (!status_of(se, args).accepted(strategy)) {
    throw PreconditionError(describe(se, phi) + " is not " + std::string(to_string(strategy)) +
                            "ly accepted");
  }
  const Evaluation& eval = se.evaluation();
  const Framework& af = eval.framework();
  ArgSet accepted;
  for (ArgIndex a : args) {
    if (!eval.with(a).empty()) accepted.insert(a);
  }
  if (strategy == Strategy::Skeptical) {
    ArgSet out;
    for (ArgIndex a : accepted) {
      const ArgSet defenders = def_by(af, a);
      for (const auto& e : eval.extensions()) out.insert_all(intersect(defenders, e));
    }
    return se.present(out, p);
  }
  FormulaCandidates cands;
  for (ArgIndex a : accepted) {
    const ArgSet defenders = def_by(af, a);
    for (const auto& e : eval.with(a)) {
      ArgSet d = intersect(defenders, e);
      PresentedSet shown = se.present(d, p);
      cands.candidates.push_back({a, e, std::move(d), std::move(shown)});
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < cands.candidates.size(); ++i) {
    if (cands.candidates[i].explanation < cands.candidates[best].explanation) best = i;
  }
  cands.canonical_pick = best;
  return cands;
}

PresentedSet formula_nonacc_explanation(const StructuredEvaluation& se, Strategy strategy,
                                        const Literal& phi, Presentation p) {
  const ArgSet args = concluding(se, phi);
  if (!status_of(se, args).non_accepted(strategy)) {
    throw PreconditionError(describe(se, phi) + " is not " + std::string(to_string(strategy)) +
                            "ly non-accepted");
  }
  const Evaluation& eval = se.evaluation();
  ArgSet out;
  for (ArgIndex a : args) {
    const std::vector<ArgSet> scope =
        strategy == Strategy::Skeptical ? eval.without(a) : eval.extensions();
    for (const auto& e : scope) out.insert_all(not_def(eval.framework(), a, e));
  }
  return se.present(out, p);
}

ApplicabilityReport check_formula_applicability(const StructuredEvaluation& se, Strategy strategy,
                                                const Literal& fact, const LiteralSet& foils,
                                                Direction direction) {
  if (foils.empty()) throw InputError("the foil set is empty");
  const StructuredFramework& sf = se.structure();
  const Framework& af = sf.framework();
  const ArgSet fact_args = concluding(se, fact);
  std::vector<ArgSet> foil_args;
  for (const auto& foil : foils) foil_args.push_back(concluding(se, foil));

  std::vector<std::optional<ArgSet>> attackers(af.size());
  auto relevant = [&](ArgIndex a, ArgIndex b) {
    if (af.self_attacking(a)) return false;
    if (!attackers[b]) attackers[b] = indirect_attackers(af, b);
    return attackers[b]->contains(a);
  };

  ApplicabilityReport report;
  const bool fact_accepted = direction == Direction::Acceptance;
  if (auto problem = status_shortfall(status_of(se, fact_args), fact_accepted, strategy)) {
    report.violations.push_back({Condition::AcceptanceStatus, "fact " + quoted(fact) + " " + *problem});
  }
  std::size_t i = 0;
  for (const auto& foil : foils) {
    const ArgSet& fargs = foil_args[i++];
    if (auto problem = status_shortfall(status_of(se, fargs), !fact_accepted, dagger(strategy))) {
      report.violations.push_back({Condition::AcceptanceStatus, "foil " + quoted(foil) + " " + *problem});
    }
    for (const auto& e : se.evaluation().extensions()) {
      if (e.intersects(fact_args) && e.intersects(fargs)) {
        report.violations.push_back({Condition::NeverCoexist, "fact " + quoted(fact) + " and foil " +
                                                                  quoted(foil) +
                                                                  " are concluded in one extension"});
        break;
      }
    }
    bool related = false;
    for (ArgIndex a : fact_args) {
      for (ArgIndex b : fargs) related = related || relevant(a, b) || relevant(b, a);
    }
    if (!related) {
      report.violations.push_back({Condition::ConflictRelevance,
                                   "no argument for fact " + quoted(fact) + " or foil " +
                                       quoted(foil) +
                                       " is conflict-relevant for an argument for the other"});
    }
  }
  return report;
}

FormulaContrast formula_contrastive(const StructuredEvaluation& se, Strategy strategy,
                                    const Literal& fact, const LiteralSet& foils,
                                    Direction direction, Presentation p) {
  auto report = check_formula_applicability(se, strategy, fact, foils, direction);
  if (!report.ok()) throw ApplicabilityError(std::move(report));
  std::vector<std::vector<PresentedSet>> foil_sides;
  if (direction == Direction::Acceptance) {
    for (const auto& foil : foils) {
      foil_sides.push_back({formula_nonacc_explanation(se, dagger(strategy), foil, p)});
    }
    return combine_contrast(alternatives(formula_acc_explanation(se, strategy, fact, p)),
                            foil_sides);
  }
  for (const auto& foil : foils) {
    foil_sides.push_back(alternatives(formula_acc_explanation(se, dagger(strategy), foil, p)));
  }
  return combine_contrast(std::vector<PresentedSet>{formula_nonacc_explanation(se, strategy, fact, p)},
                          foil_sides);
}

LiteralSet formula_foil(const StructuredFramework& sf, const Literal& fact) {
  const Literal neg = fact.negation();
  if (sf.arguments_for(neg).empty()) return {};
  return {neg};
}

}  // namespace argex::aspic
