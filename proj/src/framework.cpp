#include "argex/framework.hpp"

#include <algorithm>
#include <cctype>

#include "argex/errors.hpp"

namespace argex {

bool is_valid_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) != 0 || c == '_';
  });
}

Framework::Framework(std::vector<std::string> arguments, const std::vector<AttackPair>& attacks)
    : names_(std::move(arguments)) {
  for (const auto& n : names_) {
    if (!is_valid_identifier(n)) throw InputError("invalid argument name '" + n + "'");
  }
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    throw InputError("duplicate argument '" + *dup + "'");
  }

  attackers_.resize(names_.size());
  targets_.resize(names_.size());
  for (const auto& [from, to] : attacks) {
    auto f = find(from);
    auto t = find(to);
    if (!f) throw InputError("attack (" + from + "," + to + ") names undeclared argument '" + from + "'");
    if (!t) throw InputError("attack (" + from + "," + to + ") names undeclared argument '" + to + "'");
    targets_[*f].push_back(*t);
    attackers_[*t].push_back(*f);
  }
  for (ArgIndex a = 0; a < names_.size(); ++a) {
    auto& out = targets_[a];
    std::sort(out.begin(), out.end());
    if (auto dup = std::adjacent_find(out.begin(), out.end()); dup != out.end()) {
      throw InputError("duplicate attack (" + names_[a] + "," + names_[*dup] + ")");
    }
    std::sort(attackers_[a].begin(), attackers_[a].end());
    attack_count_ += out.size();
  }
}

std::optional<ArgIndex> Framework::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<ArgIndex>(it - names_.begin());
}

ArgIndex Framework::index(std::string_view name) const {
  if (auto a = find(name)) return *a;
  throw InputError("unknown argument '" + std::string(name) + "'");
}

bool Framework::attacks(ArgIndex from, ArgIndex to) const {
  const auto& out = targets_.at(from);
  return std::binary_search(out.begin(), out.end(), to);
}

std::vector<std::pair<ArgIndex, ArgIndex>> Framework::attack_pairs() const {
  std::vector<std::pair<ArgIndex, ArgIndex>> pairs;
  pairs.reserve(attack_count_);
  for (ArgIndex a = 0; a < names_.size(); ++a) {
    for (ArgIndex b : targets_[a]) pairs.emplace_back(a, b);
  }
  return pairs;
}

ArgSet Framework::all() const {
  std::vector<ArgIndex> v(names_.size());
  for (ArgIndex a = 0; a < v.size(); ++a) v[a] = a;
  return ArgSet(std::move(v));
}

ArgSet Framework::set_of(std::span<const std::string> names) const {
  std::vector<ArgIndex> v;
  v.reserve(names.size());
  for (const auto& n : names) v.push_back(index(n));
  return ArgSet(std::move(v));
}

std::vector<std::string> Framework::names_of(const ArgSet& s) const {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (ArgIndex a : s) out.push_back(names_.at(a));
  return out;
}

}  // namespace argex
