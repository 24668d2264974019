#include "argex/aspic/arguments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "argex/errors.hpp"

namespace argex::aspic {

namespace {

struct Draft {
  Literal conclusion;
  std::optional<std::size_t> rule;
  std::size_t kb_index = 0;
  std::vector<std::size_t> kids;
  SortedSet<std::size_t> subs;
  LiteralSet concs;  // conclusions of all sub-arguments, own one included
  LiteralSet premises;
  std::size_t height = 0;
};

class Builder {
 public:
  explicit Builder(const Theory& theory) : theory_(theory) {}

  std::vector<Draft> run() {
    std::size_t kb = 0;
    for (const auto* list : {&theory_.axioms, &theory_.premises}) {
      for (const auto& l : *list) add_premise(l, kb++);
    }
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t r = 0; r < theory_.rules.size(); ++r) grew |= apply(r);
    }
    return std::move(drafts_);
  }

 private:
  void add(Draft d) {
    if (drafts_.size() >= kMaxArguments) {
      throw InputError("the theory yields more than " + std::to_string(kMaxArguments) +
                       " arguments");
    }
    const std::size_t i = drafts_.size();
    d.subs.insert(i);
    d.concs.insert(d.conclusion);
    by_conclusion_[d.conclusion].push_back(i);
    drafts_.push_back(std::move(d));
  }

  void add_premise(const Literal& l, std::size_t kb) {
    Draft d;
    d.conclusion = l;
    d.kb_index = kb;
    d.premises.insert(l);
    add(std::move(d));
  }

  // Tries every combination of existing sub-arguments for rule r.
  bool apply(std::size_t r) {
    const Rule& rule = theory_.rules[r];
    std::vector<std::vector<std::size_t>> options;
    for (const auto& ant : rule.antecedents) {
      auto it = by_conclusion_.find(ant);
      if (it == by_conclusion_.end()) return false;
      options.push_back(it->second);  // snapshot: new arguments wait for the next round
    }
    bool grew = false;
    std::vector<std::size_t> pos(options.size(), 0);
    while (true) {
      std::vector<std::size_t> kids(options.size());
      for (std::size_t k = 0; k < options.size(); ++k) kids[k] = options[k][pos[k]];
      if (tried_.emplace(r, kids).second) grew |= try_build(r, std::move(kids));
      std::size_t k = 0;
      while (k < pos.size() && ++pos[k] == options[k].size()) pos[k++] = 0;
      if (k == pos.size()) break;
    }
    return grew;
  }

  bool try_build(std::size_t r, std::vector<std::size_t> kids) {
    const Rule& rule = theory_.rules[r];
    Draft d;
    d.conclusion = rule.consequent;
    d.rule = r;
    for (std::size_t k : kids) {
      const Draft& kid = drafts_[k];
      if (kid.concs.contains(rule.consequent)) return false;
      d.subs.insert_all(kid.subs);
      d.concs.insert_all(kid.concs);
      d.premises.insert_all(kid.premises);
      d.height = std::max(d.height, kid.height + 1);
    }
    d.kids = std::move(kids);
    add(std::move(d));
    return true;
  }

  const Theory& theory_;
  std::vector<Draft> drafts_;
  std::map<Literal, std::vector<std::size_t>> by_conclusion_;
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> tried_;
};

// Structural order: premise arguments by knowledge-base position, then rule
// arguments by rule position and recursively by sub-arguments.
class StructuralLess {
 public:
  explicit StructuralLess(const std::vector<Draft>& drafts) : drafts_(drafts) {}

  bool operator()(std::size_t a, std::size_t b) const { return compare(a, b) < 0; }

 private:
  int compare(std::size_t a, std::size_t b) const {
    if (a == b) return 0;
    const Draft& x = drafts_[a];
    const Draft& y = drafts_[b];
    if (x.rule.has_value() != y.rule.has_value()) return x.rule ? 1 : -1;
    if (!x.rule) return x.kb_index < y.kb_index ? -1 : 1;
    if (*x.rule != *y.rule) return *x.rule < *y.rule ? -1 : 1;
    for (std::size_t k = 0; k < x.kids.size(); ++k) {
      if (int c = compare(x.kids[k], y.kids[k]); c != 0) return c;
    }
    return 0;
  }

  const std::vector<Draft>& drafts_;
};

bool contrary(const Literal& a, const Literal& b) { return a == b.negation(); }

}  // namespace

std::vector<StructuredArgument> build_arguments(const Theory& theory) {
  validate(theory);
  std::vector<Draft> drafts = Builder(theory).run();
  std::vector<std::size_t> order(drafts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), StructuralLess(drafts));
  std::vector<std::size_t> rank(drafts.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;

  std::vector<StructuredArgument> out;
  out.reserve(drafts.size());
  std::size_t premise_count = 0;
  std::size_t rule_count = 0;
  for (std::size_t old : order) {
    Draft& d = drafts[old];
    StructuredArgument a;
    a.id = d.rule ? "B" + std::to_string(++rule_count) : "A" + std::to_string(++premise_count);
    a.conclusion = d.conclusion;
    a.top_rule = d.rule;
    for (std::size_t k : d.kids) a.direct_subs.push_back(rank[k]);
    std::vector<std::size_t> subs;
    for (std::size_t s : d.subs) subs.push_back(rank[s]);
    a.subs = SortedSet<std::size_t>(std::move(subs));
    a.premises = std::move(d.premises);
    a.height = d.height;
    out.push_back(std::move(a));
  }
  return out;
}

std::string_view to_string(AttackKind k) noexcept {
  switch (k) {
    case AttackKind::Undercut: return "undercut";
    case AttackKind::Rebut: return "rebut";
    case AttackKind::Undermine: return "undermine";
  }
  return "?";
}

std::vector<Attack> compute_attacks(const Theory& theory,
                                    const std::vector<StructuredArgument>& args) {
  std::vector<Attack> out;
  for (std::size_t t = 0; t < args.size(); ++t) {
    const StructuredArgument& target = args[t];
    for (std::size_t a = 0; a < args.size(); ++a) {
      const Literal& c = args[a].conclusion;
      for (std::size_t s : target.subs) {
        const StructuredArgument& sub = args[s];
        if (!sub.top_rule) continue;
        const Rule& rule = theory.rules.at(*sub.top_rule);
        if (!rule.defeasible()) continue;
        if (c == Literal::naming(rule.name, true)) {
          out.push_back({a, t, AttackKind::Undercut, s, std::nullopt});
        }
        if (contrary(c, sub.conclusion)) out.push_back({a, t, AttackKind::Rebut, s, std::nullopt});
      }
      for (const auto& p : target.premises) {
        if (!theory.is_axiom(p) && contrary(c, p)) {
          out.push_back({a, t, AttackKind::Undermine, std::nullopt, p});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Attack& x, const Attack& y) {
    return std::tie(x.attacker, x.target, x.kind, x.on_argument, x.on_premise) <
           std::tie(y.attacker, y.target, y.kind, y.on_argument, y.on_premise);
  });
  return out;
}

StructuredFramework StructuredFramework::derive(Theory theory) {
  StructuredFramework sf;
  sf.theory_ = std::move(theory);
  sf.args_ = build_arguments(sf.theory_);
  sf.attacks_ = compute_attacks(sf.theory_, sf.args_);

  std::vector<std::string> ids;
  for (const auto& a : sf.args_) ids.push_back(a.id);
  std::vector<AttackPair> pairs;
  for (const auto& at : sf.attacks_) {
    AttackPair p{sf.args_[at.attacker].id, sf.args_[at.target].id};
    if (pairs.empty() || pairs.back() != p) pairs.push_back(std::move(p));
  }
  sf.af_ = Framework(ids, pairs);
  sf.node_of_.resize(sf.args_.size());
  sf.argument_of_.resize(sf.args_.size());
  for (std::size_t i = 0; i < sf.args_.size(); ++i) {
    const ArgIndex node = sf.af_.index(sf.args_[i].id);
    sf.node_of_[i] = node;
    sf.argument_of_[node] = i;
  }
  return sf;
}

ArgSet StructuredFramework::arguments_for(const Literal& l) const {
  std::vector<ArgIndex> out;
  for (std::size_t i = 0; i < args_.size(); ++i) {
    if (args_[i].conclusion == l) out.push_back(node_of_[i]);
  }
  return ArgSet(std::move(out));
}

LiteralSet StructuredFramework::conclusions() const {
  std::vector<Literal> out;
  for (const auto& a : args_) out.push_back(a.conclusion);
  return LiteralSet(std::move(out));
}

LiteralSet StructuredFramework::conclusions_of(const ArgSet& s) const {
  std::vector<Literal> out;
  for (ArgIndex n : s) out.push_back(argument_at(n).conclusion);
  return LiteralSet(std::move(out));
}

LiteralSet StructuredFramework::premises_of(const ArgSet& s) const {
  LiteralSet out;
  for (ArgIndex n : s) out.insert_all(argument_at(n).premises);
  return out;
}

}  // namespace argex::aspic
