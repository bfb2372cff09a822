#pragma once

#include "partmat/errors.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace partmat {

inline std::optional<Violation> check_fishburn_matrix(const std::vector<std::vector<int>>& rows) {
  const int dim = static_cast<int>(rows.size());
  if (dim < 1) return Violation{"dimension", "matrix has no rows"};
  std::vector<bool> col_hit(dim, false);
  for (int i = 0; i < dim; ++i) {
    if (static_cast<int>(rows[i].size()) != dim)
      return Violation{"shape", "row " + std::to_string(i + 1) + " has length " +
                                    std::to_string(rows[i].size()) + ", expected " +
                                    std::to_string(dim)};
    bool row_hit = false;
    for (int j = 0; j < dim; ++j) {
      const int v = rows[i][j];
      if (v < 0)
        return Violation{"nonnegative", "entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") is negative"};
      if (v > 0 && j < i)
        return Violation{"upper-triangular", "entry (" + std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ") below diagonal"};
      if (v > 0) {
        row_hit = true;
        col_hit[j] = true;
      }
    }
    if (!row_hit) return Violation{"row-coverage", "row " + std::to_string(i + 1) + " is zero"};
  }
  for (int j = 0; j < dim; ++j)
    if (!col_hit[j]) return Violation{"column-coverage", "column " + std::to_string(j + 1) + " is zero"};
  return std::nullopt;
}

/// Upper-triangular nonnegative integer matrix with no zero row or column.
class FishburnMatrix {
 public:
  explicit FishburnMatrix(std::vector<std::vector<int>> rows) {
    if (auto v = check_fishburn_matrix(rows)) throw InvalidObject(*v);
    rows_ = std::move(rows);
    for (const auto& r : rows_)
      for (int v : r) weight_ += v;
  }

  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  int weight() const noexcept { return weight_; }
  // 1-based entry access.
  int at(int i, int j) const { return rows_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  friend bool operator==(const FishburnMatrix& a, const FishburnMatrix& b) { return a.rows_ == b.rows_; }
  friend auto operator<=>(const FishburnMatrix& a, const FishburnMatrix& b) {
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    return a.rows_ <=> b.rows_;
  }

 private:
  std::vector<std::vector<int>> rows_;
  int weight_ = 0;
};

}  // namespace partmat
