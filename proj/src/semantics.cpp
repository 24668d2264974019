#include "argex/semantics.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "argex/errors.hpp"

namespace argex {

std::string_view to_string(Semantics s) noexcept {
  switch (s) {
    case Semantics::Admissible: return "admissible";
    case Semantics::Complete: return "complete";
    case Semantics::Grounded: return "grounded";
    case Semantics::Preferred: return "preferred";
    case Semantics::SemiStable: return "semi-stable";
    case Semantics::Stable: return "stable";
  }
  return "?";
}

std::string_view to_string(Strategy s) noexcept {
  return s == Strategy::Skeptical ? "skeptical" : "credulous";
}

std::optional<Semantics> parse_semantics(std::string_view text) noexcept {
  for (Semantics s : kAllSemantics) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

std::optional<Strategy> parse_strategy(std::string_view text) noexcept {
  if (text == "skeptical") return Strategy::Skeptical;
  if (text == "credulous") return Strategy::Credulous;
  return std::nullopt;
}

void require_member(const Framework& af, ArgIndex a) {
  if (a >= af.size()) throw InputError("argument index " + std::to_string(a) + " out of range");
}

void require_members(const Framework& af, const ArgSet& s) {
  if (!s.empty() && s.items().back() >= af.size()) require_member(af, s.items().back());
}

bool conflict_free(const Framework& af, const ArgSet& s) {
  require_members(af, s);
  for (ArgIndex a : s) {
    for (ArgIndex b : af.targets(a)) {
      if (s.contains(b)) return false;
    }
  }
  return true;
}

bool defends(const Framework& af, const ArgSet& s, ArgIndex a) {
  require_members(af, s);
  require_member(af, a);
  for (ArgIndex attacker : af.attackers(a)) {
    const auto& counter = af.attackers(attacker);
    bool countered = std::any_of(counter.begin(), counter.end(),
                                 [&](ArgIndex c) { return s.contains(c); });
    if (!countered) return false;
  }
  return true;
}

ArgSet attacked_by(const Framework& af, const ArgSet& s) {
  std::vector<ArgIndex> out;
  for (ArgIndex a : s) {
    out.insert(out.end(), af.targets(a).begin(), af.targets(a).end());
  }
  return ArgSet(std::move(out));
}

ArgSet grounded_extension(const Framework& af) {
  // Least fixpoint of the characteristic function, computed by counting the
  // attackers of each argument that are not yet defeated.
  const std::size_t n = af.size();
  std::vector<std::size_t> live(n);
  std::vector<bool> in(n, false), out(n, false);
  std::vector<ArgIndex> queue;
  for (ArgIndex a = 0; a < n; ++a) {
    live[a] = af.attackers(a).size();
    if (live[a] == 0) {
      in[a] = true;
      queue.push_back(a);
    }
  }
  while (!queue.empty()) {
    ArgIndex a = queue.back();
    queue.pop_back();
    for (ArgIndex t : af.targets(a)) {
      if (out[t]) continue;
      out[t] = true;
      for (ArgIndex u : af.targets(t)) {
        if (--live[u] == 0 && !in[u] && !out[u]) {
          in[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  std::vector<ArgIndex> members;
  for (ArgIndex a = 0; a < n; ++a) {
    if (in[a]) members.push_back(a);
  }
  return ArgSet(std::move(members));
}

namespace {

// Backtracking over membership decisions. A complete extension is
// conflict-free and equals the set of arguments it defends; since defence
// only grows as members are added, a non-member that is already defended
// refutes the branch and an open one that is defended must join.
class CompleteEnumerator {
 public:
  explicit CompleteEnumerator(const Framework& af) : af_(af) {}

  std::vector<ArgSet> run() {
    std::vector<State> s(af_.size(), State::Open);
    for (ArgIndex a = 0; a < af_.size(); ++a) {
      if (af_.self_attacking(a)) s[a] = State::Out;
    }
    if (propagate(s)) search(s);
    canonicalize(found_);
    return std::move(found_);
  }

 private:
  enum class State : std::uint8_t { Open, In, Out };

  std::vector<bool> attacked(const std::vector<State>& s) const {
    std::vector<bool> hit(s.size(), false);
    for (ArgIndex a = 0; a < s.size(); ++a) {
      if (s[a] != State::In) continue;
      for (ArgIndex t : af_.targets(a)) hit[t] = true;
    }
    return hit;
  }

  // Applies forced decisions until nothing changes. Returns false when the
  // branch cannot lead to a complete extension.
  bool propagate(std::vector<State>& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      const std::vector<bool> hit = attacked(s);
      for (ArgIndex a = 0; a < s.size(); ++a) {
        if (s[a] == State::In) {
          if (hit[a]) return false;
          for (ArgIndex b : af_.attackers(a)) {
            if (s[b] == State::Open) {
              s[b] = State::Out;
              changed = true;
            }
            const auto& counter = af_.attackers(b);
            if (std::none_of(counter.begin(), counter.end(), [&](ArgIndex c) { return s[c] != State::Out; })) {
              return false;
            }
          }
          continue;
        }
        if (hit[a]) {
          if (s[a] == State::Open) {
            s[a] = State::Out;
            changed = true;
          }
          continue;
        }
        const auto& att = af_.attackers(a);
        const bool defended = std::all_of(att.begin(), att.end(), [&](ArgIndex b) { return hit[b]; });
        if (!defended) continue;
        if (s[a] == State::Out) return false;
        s[a] = State::In;
        changed = true;
      }
    }
    return true;
  }

  void search(const std::vector<State>& s) {
    auto it = std::find(s.begin(), s.end(), State::Open);
    if (it == s.end()) {
      std::vector<ArgIndex> members;
      for (ArgIndex a = 0; a < s.size(); ++a) {
        if (s[a] == State::In) members.push_back(a);
      }
      found_.emplace_back(std::move(members));
      return;
    }
    const auto a = static_cast<ArgIndex>(it - s.begin());
    for (State choice : {State::In, State::Out}) {
      std::vector<State> next = s;
      next[a] = choice;
      if (propagate(next)) search(next);
    }
  }

  const Framework& af_;
  std::vector<ArgSet> found_;
};

std::vector<ArgSet> complete_extensions(const Framework& af) { return CompleteEnumerator(af).run(); }

// Keeps the sets whose key is not strictly contained in another set's key.
template <class Key>
std::vector<ArgSet> maximal_by(const std::vector<ArgSet>& sets, Key key) {
  std::vector<ArgSet> keys;
  keys.reserve(sets.size());
  for (const auto& s : sets) keys.push_back(key(s));
  std::vector<ArgSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
      dominated = j != i && keys[i] != keys[j] && keys[i].is_subset_of(keys[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

// Include/exclude backtracking over arguments in index order, pruning
// branches that are already in conflict or cannot defend a member any more.
class AdmissibleEnumerator {
 public:
  explicit AdmissibleEnumerator(const Framework& af)
      : af_(af), state_(af.size(), State::Open) {}

  std::vector<ArgSet> run() {
    extend(0);
    canonicalize(found_);
    return std::move(found_);
  }

 private:
  enum class State : std::uint8_t { Open, In, Excluded };

  bool can_join(ArgIndex a) const {
    if (af_.self_attacking(a)) return false;
    for (ArgIndex b : af_.targets(a)) {
      if (state_[b] == State::In) return false;
    }
    for (ArgIndex b : af_.attackers(a)) {
      if (state_[b] == State::In) return false;
    }
    return true;
  }

  // Every attacker of a member must still be counterable by a member or by
  // an open argument.
  bool still_defensible() const {
    for (ArgIndex a = 0; a < af_.size(); ++a) {
      if (state_[a] != State::In) continue;
      for (ArgIndex b : af_.attackers(a)) {
        const auto& counter = af_.attackers(b);
        bool possible = std::any_of(counter.begin(), counter.end(),
                                    [&](ArgIndex c) { return state_[c] != State::Excluded; });
        if (!possible) return false;
      }
    }
    return true;
  }

  void extend(ArgIndex next) {
    if (!still_defensible()) return;
    if (next == af_.size()) {
      std::vector<ArgIndex> members;
      for (ArgIndex a = 0; a < af_.size(); ++a) {
        if (state_[a] == State::In) members.push_back(a);
      }
      ArgSet s(std::move(members));
      bool admissible = std::all_of(s.begin(), s.end(), [&](ArgIndex a) { return defends(af_, s, a); });
      if (admissible) found_.push_back(std::move(s));
      return;
    }
    if (can_join(next)) {
      state_[next] = State::In;
      extend(next + 1);
    }
    state_[next] = State::Excluded;
    extend(next + 1);
    state_[next] = State::Open;
  }

  const Framework& af_;
  std::vector<State> state_;
  std::vector<ArgSet> found_;
};

}  // namespace

std::vector<ArgSet> extensions(const Framework& af, Semantics sem) {
  std::vector<ArgSet> out;
  switch (sem) {
    case Semantics::Admissible:
      return AdmissibleEnumerator(af).run();
    case Semantics::Grounded:
      return {grounded_extension(af)};
    case Semantics::Complete:
      return complete_extensions(af);
    case Semantics::Preferred:
      out = maximal_by(complete_extensions(af), [](const ArgSet& s) { return s; });
      break;
    case Semantics::SemiStable:
      out = maximal_by(complete_extensions(af),
                       [&](const ArgSet& s) { return unite(s, attacked_by(af, s)); });
      break;
    case Semantics::Stable:
      for (auto& s : complete_extensions(af)) {
        if (unite(s, attacked_by(af, s)).size() == af.size()) out.push_back(std::move(s));
      }
      break;
  }
  canonicalize(out);
  return out;
}

std::vector<ArgSet> ext_with(const std::vector<ArgSet>& exts, ArgIndex a) {
  std::vector<ArgSet> out;
  std::copy_if(exts.begin(), exts.end(), std::back_inserter(out),
               [a](const ArgSet& e) { return e.contains(a); });
  return out;
}

std::vector<ArgSet> ext_without(const std::vector<ArgSet>& exts, ArgIndex a) {
  std::vector<ArgSet> out;
  std::copy_if(exts.begin(), exts.end(), std::back_inserter(out),
               [a](const ArgSet& e) { return !e.contains(a); });
  return out;
}

AcceptanceStatus status_from_counts(std::size_t with, std::size_t without) noexcept {
  AcceptanceStatus st;
  st.skeptically_accepted = without == 0;
  st.credulously_accepted = with > 0;
  st.skeptically_non_accepted = without > 0;
  st.credulously_non_accepted = with == 0;
  return st;
}

Evaluation::Evaluation(Framework af, Semantics sem)
    : af_(std::make_shared<const Framework>(std::move(af))), sem_(sem), exts_(argex::extensions(*af_, sem)) {}

std::vector<ArgSet> Evaluation::with(ArgIndex a) const {
  require_member(*af_, a);
  return ext_with(exts_, a);
}

std::vector<ArgSet> Evaluation::without(ArgIndex a) const {
  require_member(*af_, a);
  return ext_without(exts_, a);
}

AcceptanceStatus Evaluation::status(ArgIndex a) const {
  require_member(*af_, a);
  if (exts_.empty()) {
    throw PreconditionError("acceptance is undefined: the framework has no " +
                            std::string(to_string(sem_)) + " extensions");
  }
  const auto with_count = static_cast<std::size_t>(
      std::count_if(exts_.begin(), exts_.end(), [a](const ArgSet& e) { return e.contains(a); }));
  return status_from_counts(with_count, exts_.size() - with_count);
}

AcceptanceStatus acceptance_status(const Framework& af, Semantics sem, ArgIndex a) {
  return Evaluation(af, sem).status(a);
}

}  // namespace argex
