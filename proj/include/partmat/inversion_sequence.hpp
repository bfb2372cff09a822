#pragma once

#include "partmat/errors.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace partmat {

inline std::optional<Violation> check_inversion_sequence(const std::vector<int>& e) {
  if (e.empty()) return Violation{"length", "inversion sequence is empty"};
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || e[i] > static_cast<int>(i))
      return Violation{"entry-range", "e_" + std::to_string(i + 1) + "=" + std::to_string(e[i]) +
                                          " outside [0," + std::to_string(i) + "]"};
  return std::nullopt;
}

/// (e_1, ..., e_n) with 0 <= e_i < i.
class InversionSequence {
 public:
  explicit InversionSequence(std::vector<int> e) {
    if (auto v = check_inversion_sequence(e)) throw InvalidObject(*v);
    e_ = std::move(e);
  }

  int length() const noexcept { return static_cast<int>(e_.size()); }
  // 1-based.
  int at(int i) const { return e_[i - 1]; }
  const std::vector<int>& values() const noexcept { return e_; }

  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;
  friend auto operator<=>(const InversionSequence&, const InversionSequence&) = default;

 private:
  std::vector<int> e_;
};

// Distinct values, 0 included.
inline int dist(const InversionSequence& e) {
  std::vector<int> v = e.values();
  std::sort(v.begin(), v.end());
  return static_cast<int>(std::unique(v.begin(), v.end()) - v.begin());
}

// No i < j < k with e_i = e_k: each value occurs at most twice, and two
// occurrences must be adjacent.
inline bool in_pattern_class(const InversionSequence& e) {
  const auto& v = e.values();
  std::vector<int> first(v.size(), -1), seen(v.size(), 0);
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (++seen[v[i]] == 1) {
      first[v[i]] = i;
      continue;
    }
    if (seen[v[i]] > 2 || i - first[v[i]] != 1) return false;
  }
  return true;
}

inline bool is_nondecreasing(const InversionSequence& e) {
  return std::is_sorted(e.values().begin(), e.values().end());
}

}  // namespace partmat
