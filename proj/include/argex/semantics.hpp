#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "argex/framework.hpp"

namespace argex {

/// Extension-based semantics. Stable is offered in addition to the
/// admissibility-based family.
enum class Semantics { Admissible, Complete, Grounded, Preferred, SemiStable, Stable };

enum class Strategy { Skeptical, Credulous };

inline constexpr Semantics kAllSemantics[] = {Semantics::Admissible, Semantics::Complete,
                                              Semantics::Grounded,   Semantics::Preferred,
                                              Semantics::SemiStable, Semantics::Stable};

/// The opposite strategy: skeptical for credulous and vice versa.
[[nodiscard]] constexpr Strategy dagger(Strategy s) noexcept {
  return s == Strategy::Skeptical ? Strategy::Credulous : Strategy::Skeptical;
}

[[nodiscard]] std::string_view to_string(Semantics s) noexcept;
[[nodiscard]] std::string_view to_string(Strategy s) noexcept;
[[nodiscard]] std::optional<Semantics> parse_semantics(std::string_view text) noexcept;
[[nodiscard]] std::optional<Strategy> parse_strategy(std::string_view text) noexcept;

/// Throws InputError when `s` mentions an index outside the framework.
void require_members(const Framework& af, const ArgSet& s);
void require_member(const Framework& af, ArgIndex a);

[[nodiscard]] bool conflict_free(const Framework& af, const ArgSet& s);
/// True iff `s` attacks every attacker of `a`.
[[nodiscard]] bool defends(const Framework& af, const ArgSet& s, ArgIndex a);
/// The arguments attacked by some member of `s`.
[[nodiscard]] ArgSet attacked_by(const Framework& af, const ArgSet& s);

[[nodiscard]] ArgSet grounded_extension(const Framework& af);

/// All extensions of `af` under `sem`, canonically ordered. Grounded always
/// yields exactly one extension; Stable may yield none.
[[nodiscard]] std::vector<ArgSet> extensions(const Framework& af, Semantics sem);

[[nodiscard]] std::vector<ArgSet> ext_with(const std::vector<ArgSet>& exts, ArgIndex a);
[[nodiscard]] std::vector<ArgSet> ext_without(const std::vector<ArgSet>& exts, ArgIndex a);

/// The four acceptance flags of one argument. An argument can be credulously
/// accepted and skeptically non-accepted at the same time.
struct AcceptanceStatus {
  bool skeptically_accepted = false;
  bool credulously_accepted = false;
  bool skeptically_non_accepted = false;
  bool credulously_non_accepted = false;

  [[nodiscard]] bool accepted(Strategy s) const noexcept {
    return s == Strategy::Skeptical ? skeptically_accepted : credulously_accepted;
  }
  [[nodiscard]] bool non_accepted(Strategy s) const noexcept {
    return s == Strategy::Skeptical ? skeptically_non_accepted : credulously_non_accepted;
  }

  friend bool operator==(const AcceptanceStatus&, const AcceptanceStatus&) = default;
};

/// Acceptance flags from the number of extensions that contain the item and
/// the number that do not.
[[nodiscard]] AcceptanceStatus status_from_counts(std::size_t with, std::size_t without) noexcept;

/// A framework together with its extensions under one semantics. Every
/// query that needs the extensions goes through this, so they are computed
/// once.
class Evaluation {
 public:
  Evaluation(Framework af, Semantics sem);

  [[nodiscard]] const Framework& framework() const noexcept { return *af_; }
  [[nodiscard]] Semantics semantics() const noexcept { return sem_; }
  [[nodiscard]] const std::vector<ArgSet>& extensions() const noexcept { return exts_; }

  [[nodiscard]] std::vector<ArgSet> with(ArgIndex a) const;
  [[nodiscard]] std::vector<ArgSet> without(ArgIndex a) const;

  /// Throws PreconditionError when there are no extensions (acceptance is
  /// undefined then), InputError for an unknown argument.
  [[nodiscard]] AcceptanceStatus status(ArgIndex a) const;

 private:
  std::shared_ptr<const Framework> af_;
  Semantics sem_;
  std::vector<ArgSet> exts_;
};

[[nodiscard]] AcceptanceStatus acceptance_status(const Framework& af, Semantics sem, ArgIndex a);

}  // namespace argex
