#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <utility>
#include <vector>

namespace argex {

/// Sorted, duplicate-free set stored as a flat vector.
///
/// The ordering of whole sets is the canonical one used for every output of
/// the library: smaller sets first, equal sizes compared lexicographically.
template <class T>
class SortedSet {
 public:
  using value_type = T;
  using const_iterator = typename std::vector<T>::const_iterator;

  SortedSet() = default;
  SortedSet(std::initializer_list<T> items) : items_(items) { normalize(); }
  explicit SortedSet(std::vector<T> items) : items_(std::move(items)) { normalize(); }

  template <class It>
  SortedSet(It first, It last) : items_(first, last) {
    normalize();
  }

  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] const_iterator begin() const noexcept { return items_.begin(); }
  [[nodiscard]] const_iterator end() const noexcept { return items_.end(); }
  [[nodiscard]] const std::vector<T>& items() const noexcept { return items_; }

  [[nodiscard]] bool contains(const T& x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }

  void insert(const T& x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) items_.insert(it, x);
  }

  void insert_all(const SortedSet& other) { *this = unite(*this, other); }

  [[nodiscard]] bool is_subset_of(const SortedSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
  }

  [[nodiscard]] bool intersects(const SortedSet& other) const {
    auto a = items_.begin();
    auto b = other.items_.begin();
    while (a != items_.end() && b != other.items_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return true;
      }
    }
    return false;
  }

  friend SortedSet unite(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
  }

  friend SortedSet intersect(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
  }

  friend SortedSet subtract(const SortedSet& a, const SortedSet& b) {
    SortedSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out.items_));
    return out;
  }

  friend bool operator==(const SortedSet&, const SortedSet&) = default;

  friend std::strong_ordering operator<=>(const SortedSet& a, const SortedSet& b) {
    if (a.size() != b.size()) return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a.items_[i] < b.items_[i]) return std::strong_ordering::less;
      if (b.items_[i] < a.items_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::vector<T> items_;
};

/// Sorts a list of sets into canonical order and drops duplicates.
template <class T>
void canonicalize(std::vector<SortedSet<T>>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace argex
