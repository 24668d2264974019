#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "argex/aspic/arguments.hpp"
#include "argex/contrastive.hpp"
#include "argex/semantics.hpp"

namespace argex::aspic {

/// How an explanation (a set of arguments) is shown: as argument ids, or as
/// the premises those arguments rest on.
enum class Presentation { Identity, Premises };

[[nodiscard]] std::string_view to_string(Presentation p) noexcept;
[[nodiscard]] std::optional<Presentation> parse_presentation(std::string_view text) noexcept;

/// A presented explanation: argument ids or rendered literals.
using PresentedSet = SortedSet<std::string>;

/// A structured framework with its extensions under one semantics.
class StructuredEvaluation {
 public:
  StructuredEvaluation(StructuredFramework sf, Semantics sem);

  [[nodiscard]] const StructuredFramework& structure() const noexcept { return *sf_; }
  [[nodiscard]] const Evaluation& evaluation() const noexcept { return eval_; }

  [[nodiscard]] PresentedSet present(const ArgSet& s, Presentation p) const;

 private:
  std::shared_ptr<const StructuredFramework> sf_;
  Evaluation eval_;
};

/// Acceptance of a literal through the arguments concluding it. An
/// extension counts as containing the literal when it holds at least one of
/// those arguments. Empty when no argument concludes the literal.
[[nodiscard]] std::optional<AcceptanceStatus> formula_status(const StructuredEvaluation& se,
                                                             const Literal& phi);

struct FormulaCandidate {
  ArgIndex argument;
  ArgSet extension;
  ArgSet defenders;
  PresentedSet explanation;
};

/// Credulous formula explanations: one candidate per accepted argument for
/// the literal and extension containing it, with a canonical pick.
struct FormulaCandidates {
  std::vector<FormulaCandidate> candidates;
  std::size_t canonical_pick = 0;

  [[nodiscard]] const PresentedSet& pick() const { return candidates.at(canonical_pick).explanation; }
  /// Distinct explanations in canonical order; the first is pick().
  [[nodiscard]] std::vector<PresentedSet> alternatives() const;
};

using FormulaAcceptance = std::variant<PresentedSet, FormulaCandidates>;

[[nodiscard]] const PresentedSet& chosen(const FormulaAcceptance& e);
[[nodiscard]] std::vector<PresentedSet> alternatives(const FormulaAcceptance& e);

/// Why `phi` is accepted. Skeptical: the defenders of every accepted
/// argument for `phi` within every extension. Credulous: the defenders of
/// one accepted argument within one extension containing it. Throws
/// PreconditionError when `phi` is not concluded or not accepted.
[[nodiscard]] FormulaAcceptance formula_acc_explanation(const StructuredEvaluation& se,
                                                        Strategy strategy, const Literal& phi,
                                                        Presentation p);

/// Why `phi` is not accepted: the undefended attackers of every argument
/// for `phi`, over the extensions without that argument (skeptical) or over
/// all extensions (credulous). Throws PreconditionError when `phi` is not
/// concluded or not non-accepted.
[[nodiscard]] PresentedSet formula_nonacc_explanation(const StructuredEvaluation& se,
                                                      Strategy strategy, const Literal& phi,
                                                      Presentation p);

/// The applicability conditions lifted to literals: statuses as for
/// arguments, no extension concludes both fact and foil, and some argument
/// for one is conflict-relevant for some argument for the other. Throws
/// PreconditionError when fact or a foil is not concluded by any argument,
/// InputError for an empty foil set.
[[nodiscard]] ApplicabilityReport check_formula_applicability(const StructuredEvaluation& se,
                                                              Strategy strategy,
                                                              const Literal& fact,
                                                              const LiteralSet& foils,
                                                              Direction direction);

using FormulaContrast = Contrast<PresentedSet>;

/// Contrastive explanation for literals in the given direction, combined
/// after presentation. Throws ApplicabilityError.
[[nodiscard]] FormulaContrast formula_contrastive(const StructuredEvaluation& se,
                                                  Strategy strategy, const Literal& fact,
                                                  const LiteralSet& foils, Direction direction,
                                                  Presentation p);

/// The implicit foil of a literal: its negation, if some argument concludes it.
[[nodiscard]] LiteralSet formula_foil(const StructuredFramework& sf, const Literal& fact);

}  // namespace argex::aspic
