#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "argex/framework.hpp"
#include "argex/semantics.hpp"

namespace argex {

/// Arguments that (in)directly defend `a`.
[[nodiscard]] ArgSet def_by(const Framework& af, ArgIndex a);

/// def_by(af, a) restricted to the members of `extension`.
[[nodiscard]] ArgSet def_by_in(const Framework& af, ArgIndex a, const ArgSet& extension);

/// The (in)direct attackers of `a` against which `extension` offers no
/// defence, i.e. that no member of `extension` attacks.
[[nodiscard]] ArgSet not_def(const Framework& af, ArgIndex a, const ArgSet& extension);

/// A stricter reading of not_def: `b` counts only if some odd attack walk
/// from `b` to `a` has none of its odd-distance arguments (counted from `a`)
/// attacked by `extension`. Always a subset of not_def; kept for comparison.
[[nodiscard]] ArgSet not_def_intercepted(const Framework& af, ArgIndex a, const ArgSet& extension);

struct AcceptanceCandidate {
  ArgSet extension;
  ArgSet explanation;
};

/// Credulous acceptance explanations are a choice: any extension containing
/// the argument yields one. All of them are kept, plus a canonical pick
/// (smallest explanation, ties broken lexicographically).
struct CredulousCandidates {
  std::vector<AcceptanceCandidate> candidates;  // in extension order
  std::size_t canonical_pick = 0;

  [[nodiscard]] const ArgSet& pick() const { return candidates.at(canonical_pick).explanation; }
  /// Candidate indices in canonical order; the first is canonical_pick.
  [[nodiscard]] std::vector<std::size_t> ranking() const;
};

/// Skeptical explanations are a single set, credulous ones a candidate list.
using AcceptanceExplanation = std::variant<ArgSet, CredulousCandidates>;

[[nodiscard]] const ArgSet& chosen(const AcceptanceExplanation& e);
/// Every admissible answer in canonical order (a single one for skeptical).
[[nodiscard]] std::vector<ArgSet> alternatives(const AcceptanceExplanation& e);

/// Why `a` is accepted. Throws PreconditionError when it is not accepted
/// under `strategy`.
[[nodiscard]] AcceptanceExplanation acc_explanation(const Evaluation& eval, Strategy strategy,
                                                    ArgIndex a);

/// Why `a` is not accepted: the undefended attackers over the extensions
/// without `a` (skeptical) or over all extensions (credulous). Throws
/// PreconditionError when `a` is not non-accepted under `strategy`.
[[nodiscard]] ArgSet nonacc_explanation(const Evaluation& eval, Strategy strategy, ArgIndex a);

}  // namespace argex
