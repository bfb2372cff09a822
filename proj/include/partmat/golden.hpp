#pragma once

#include <cstdint>
#include <vector>

namespace partmat::golden {

// Coefficients of S_n(q), lowest power first, n = 1..8.
inline const std::vector<std::vector<std::int64_t>>& s_table() {
  static const std::vector<std::vector<std::int64_t>> table = {
      {1},
      {2},
      {5, 1},
      {15, 7, 2},
      {53, 41, 20, 5, 1},
      {217, 240, 161, 68, 24, 8, 2},
      {1014, 1475, 1253, 716, 334, 154, 62, 22, 9, 1},
      {5335, 9677, 9950, 7066, 4034, 2192, 1098, 527, 271, 108, 40, 18, 4},
  };
  return table;
}

// Fishburn numbers, n = 1..8.
inline const std::vector<std::int64_t>& fishburn_numbers() {
  static const std::vector<std::int64_t> v = {1, 2, 5, 15, 53, 217, 1014, 5335};
  return v;
}

// Sizes of the pattern class (and of the improper matrices), n = 1..8.
inline const std::vector<std::int64_t>& pattern_class_counts() {
  static const std::vector<std::int64_t> v = {1, 2, 4, 10, 28, 88, 304, 1144};
  return v;
}

}  // namespace partmat::golden
