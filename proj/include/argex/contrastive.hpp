#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argex/errors.hpp"
#include "argex/explanations.hpp"
#include "argex/framework.hpp"
#include "argex/semantics.hpp"

namespace argex {

/// Which side is explained as accepted: the fact (Acceptance, foils
/// non-accepted) or the foils (NonAcceptance, fact non-accepted).
enum class Direction { Acceptance, NonAcceptance };

[[nodiscard]] std::string_view to_string(Direction d) noexcept;

/// The three requirements a fact/foil question has to meet.
enum class Condition { AcceptanceStatus, NeverCoexist, ConflictRelevance };

[[nodiscard]] std::string_view to_string(Condition c) noexcept;

struct Violation {
  Condition condition;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ApplicabilityReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
  [[nodiscard]] bool violates(Condition c) const noexcept;

  friend bool operator==(const ApplicabilityReport&, const ApplicabilityReport&) = default;
};

/// Raised by the contrastive operations when the question is not applicable.
class ApplicabilityError : public PreconditionError {
 public:
  explicit ApplicabilityError(ApplicabilityReport report);
  [[nodiscard]] const ApplicabilityReport& report() const noexcept { return report_; }

 private:
  ApplicabilityReport report_;
};

/// Why `st` falls short of the status a contrastive question asks for, or
/// nullopt if it does not. With `accepted` the item must be at least
/// credulously accepted and accepted under `strategy`; otherwise at least
/// skeptically non-accepted and non-accepted under `strategy`.
[[nodiscard]] std::optional<std::string> status_shortfall(const AcceptanceStatus& st,
                                                          bool accepted, Strategy strategy);

enum class ContrastKind { Common, Pair };

/// Result of a contrastive question. Common when the fact-side and
/// foil-side explanations share elements (then `common` holds them), Pair
/// otherwise. Both operands that were combined are always kept.
template <class Set>
struct Contrast {
  ContrastKind kind = ContrastKind::Pair;
  Set common;
  Set fact_side;
  Set foil_side;

  friend bool operator==(const Contrast&, const Contrast&) = default;
};

using ContrastiveResult = Contrast<ArgSet>;

/// Intersects a fact-side explanation with the union of the foil-side ones.
///
/// Each side is given as its alternatives in canonical order: a single set
/// for skeptical explanations, every candidate for credulous ones. A
/// combination with a non-empty intersection wins over the canonical pick,
/// since any candidate is a legitimate answer.
template <class Set>
[[nodiscard]] Contrast<Set> combine_contrast(const std::vector<Set>& fact_alternatives,
                                             const std::vector<std::vector<Set>>& foil_alternatives) {
  auto foil_side_for = [&](const Set& fact_side) {
    Set out;
    for (const auto& alts : foil_alternatives) {
      const Set* pick = &alts.front();
      for (const auto& candidate : alts) {
        if (candidate.intersects(fact_side)) {
          pick = &candidate;
          break;
        }
      }
      out.insert_all(*pick);
    }
    return out;
  };
  for (const auto& fact_side : fact_alternatives) {
    Set foil_side = foil_side_for(fact_side);
    Set common = intersect(fact_side, foil_side);
    if (!common.empty()) {
      return {ContrastKind::Common, std::move(common), fact_side, std::move(foil_side)};
    }
  }
  Set foil_side;
  for (const auto& alts : foil_alternatives) foil_side.insert_all(alts.front());
  return {ContrastKind::Pair, Set{}, fact_alternatives.front(), std::move(foil_side)};
}

/// Checks the three applicability conditions for every foil.
///
/// AcceptanceStatus: the fact is accepted (Acceptance) or non-accepted
/// (NonAcceptance) under `strategy` and each foil has the opposite status
/// under dagger(strategy). NeverCoexist: no extension holds fact and foil.
/// ConflictRelevance: one of the two is conflict-relevant for the other.
/// A fact listed among its own foils is allowed and fails one of these.
/// Throws InputError for an empty foil set.
[[nodiscard]] ApplicabilityReport check_applicability(const Evaluation& eval, Strategy strategy,
                                                      ArgIndex fact, const ArgSet& foils,
                                                      Direction direction);

/// Why `fact` is accepted rather than the foils. Throws ApplicabilityError.
[[nodiscard]] ContrastiveResult cont_acc(const Evaluation& eval, Strategy strategy, ArgIndex fact,
                                         const ArgSet& foils);

/// Why `fact` is not accepted while the foils are. Throws ApplicabilityError.
[[nodiscard]] ContrastiveResult cont_nonacc(const Evaluation& eval, Strategy strategy,
                                            ArgIndex fact, const ArgSet& foils);

/// The implicit foil of `a`: its direct attackers. Contains `a` itself when
/// `a` attacks itself.
[[nodiscard]] ArgSet derive_foil(const Framework& af, ArgIndex a);

}  // namespace argex
