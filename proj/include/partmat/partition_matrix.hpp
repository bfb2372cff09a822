#pragma once

#include "partmat/errors.hpp"

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

// A nonempty entry of a partition matrix. Indices are 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  std::vector<int> elements;  // strictly increasing

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

namespace detail {

inline std::string cell_name(int r, int c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace detail

/// Checks every partition-matrix invariant on raw data and reports the first
/// one that fails. Cells may be given in any order; element lists must
/// already be strictly increasing.
inline std::optional<Violation> check_partition_matrix(int n, int dim,
                                                       const std::vector<Cell>& cells) {
  using detail::cell_name;
  if (n < 1) return Violation{"weight", "n must be positive, got " + std::to_string(n)};
  if (dim < 1) return Violation{"dimension", "dim must be positive, got " + std::to_string(dim)};

  std::vector<int> row_of(n + 1, 0), col_of(n + 1, 0);
  std::vector<std::pair<int, int>> seen;
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col < 1 || c.row > dim || c.col > dim)
      return Violation{"cell-range", "cell " + cell_name(c.row, c.col) + " outside [1," +
                                         std::to_string(dim) + "]^2"};
    if (c.row > c.col)
      return Violation{"upper-triangular", "cell " + cell_name(c.row, c.col) + " below diagonal"};
    if (c.elements.empty())
      return Violation{"empty-cell", "stored cell " + cell_name(c.row, c.col) + " is empty"};
    for (std::size_t i = 1; i < c.elements.size(); ++i)
      if (c.elements[i - 1] >= c.elements[i])
        return Violation{"sorted-set",
                         "cell " + cell_name(c.row, c.col) + " is not strictly increasing"};
    seen.emplace_back(c.row, c.col);
    for (int k : c.elements) {
      if (k < 1 || k > n)
        return Violation{"element-range", "element " + std::to_string(k) + " in cell " +
                                              cell_name(c.row, c.col) + " outside [1," +
                                              std::to_string(n) + "]"};
      if (row_of[k] != 0)
        return Violation{"disjoint", "element " + std::to_string(k) + " appears twice"};
      row_of[k] = c.row;
      col_of[k] = c.col;
    }
  }
  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end())
    return Violation{"duplicate-cell", "cell " + cell_name(it->first, it->second) +
                                           " stored more than once"};
  for (int k = 1; k <= n; ++k)
    if (row_of[k] == 0)
      return Violation{"partition-cover", "element " + std::to_string(k) + " missing"};

  std::vector<bool> row_used(dim + 1, false), col_used(dim + 1, false);
  for (const Cell& c : cells) {
    row_used[c.row] = true;
    col_used[c.col] = true;
  }
  for (int r = 1; r <= dim; ++r)
    if (!row_used[r]) return Violation{"row-coverage", "row " + std::to_string(r) + " is empty"};
  for (int c = 1; c <= dim; ++c)
    if (!col_used[c])
      return Violation{"column-coverage", "column " + std::to_string(c) + " is empty"};

  for (int k = 1; k < n; ++k)
    if (col_of[k] > col_of[k + 1])
      return Violation{"column-monotone", "col(" + std::to_string(k) + ")=" +
                                              std::to_string(col_of[k]) + " > col(" +
                                              std::to_string(k + 1) + ")=" +
                                              std::to_string(col_of[k + 1])};
  return std::nullopt;
}

/// Upper-triangular matrix of disjoint nonempty sets partitioning [n], with
/// every row and column occupied and column index weakly increasing in the
/// element. Stored sparsely in canonical order (cells sorted by (row, col)),
/// so equality and ordering are structural. Immutable after construction.
class PartitionMatrix {
 public:
  PartitionMatrix(int n, int dim, std::vector<Cell> cells) : n_(n), dim_(dim) {
    for (Cell& c : cells) std::sort(c.elements.begin(), c.elements.end());
    if (auto v = check_partition_matrix(n, dim, cells)) throw InvalidObject(*v);
    cells_ = std::move(cells);
    std::sort(cells_.begin(), cells_.end(),
              [](const Cell& a, const Cell& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
    index();
  }

  int weight() const noexcept { return n_; }
  int dim() const noexcept { return dim_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  // Element k must lie in [1, weight()].
  int row_of(int k) const { return row_[k]; }
  int col_of(int k) const { return col_[k]; }

  // n_d for d = 1..dim (index 0 unused).
  std::vector<int> column_sizes() const {
    std::vector<int> sizes(dim_ + 1, 0);
    for (const Cell& c : cells_) sizes[c.col] += static_cast<int>(c.elements.size());
    return sizes;
  }

  // The cell holding element k.
  const Cell& cell_of(int k) const {
    for (const Cell& c : cells_)
      if (c.row == row_[k] && c.col == col_[k]) return c;
    throw std::logic_error("partition matrix index out of sync");
  }

  friend bool operator==(const PartitionMatrix& a, const PartitionMatrix& b) {
    return a.n_ == b.n_ && a.dim_ == b.dim_ && a.cells_ == b.cells_;
  }
  friend auto operator<=>(const PartitionMatrix& a, const PartitionMatrix& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.cells_ <=> b.cells_;
  }

 private:
  void index() {
    row_.assign(n_ + 1, 0);
    col_.assign(n_ + 1, 0);
    for (const Cell& c : cells_)
      for (int k : c.elements) {
        row_[k] = c.row;
        col_[k] = c.col;
      }
  }

  int n_;
  int dim_;
  std::vector<Cell> cells_;
  std::vector<int> row_;
  std::vector<int> col_;
};

/// Builds a partition matrix from the row and column index of every element
/// (index 0 unused). Used by generators and maps that move elements around.
inline PartitionMatrix matrix_from_positions(int dim, const std::vector<int>& rows,
                                             const std::vector<int>& cols) {
  const int n = static_cast<int>(rows.size()) - 1;
  std::vector<Cell> cells;
  for (int k = 1; k <= n; ++k) {
    auto it = std::find_if(cells.begin(), cells.end(), [&](const Cell& c) {
      return c.row == rows[k] && c.col == cols[k];
    });
    if (it == cells.end())
      cells.push_back(Cell{rows[k], cols[k], {k}});
    else
      it->elements.push_back(k);
  }
  return PartitionMatrix(n, dim, std::move(cells));
}

// ---------------------------------------------------------------------------
// Statistics

struct Position {
  int row;
  int col;
  friend bool operator==(const Position&, const Position&) = default;
};

inline Position locate(const PartitionMatrix& p, int k) {
  if (k < 1 || k > p.weight())
    throw std::out_of_range("element " + std::to_string(k) + " outside [1," +
                            std::to_string(p.weight()) + "]");
  return {p.row_of(k), p.col_of(k)};
}

// Pairs (i, j) with i > j, same column, row(i) < row(j); ordered by (j, i).
inline std::vector<std::pair<int, int>> inversions(const PartitionMatrix& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.weight();
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n; ++i)
      if (p.col_of(i) == p.col_of(j) && p.row_of(i) < p.row_of(j)) out.emplace_back(i, j);
  return out;
}

inline int inv(const PartitionMatrix& p) {
  // Columns hold consecutive ranges, so only pairs inside one column count.
  int count = 0;
  const int n = p.weight();
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= n && p.col_of(i) == p.col_of(j); ++i)
      if (p.row_of(i) < p.row_of(j)) ++count;
  return count;
}

enum class StepKind { Ascent, Descent };

struct StepEvent {
  int i;
  StepKind kind;
  bool proper;
  friend bool operator==(const StepEvent&, const StepEvent&) = default;
};

/// Ascents and descents (i, i+1) inside a column. An event is proper when i
/// has the parity of the smallest element of its column.
inline std::vector<StepEvent> step_events(const PartitionMatrix& p) {
  std::vector<StepEvent> out;
  const int n = p.weight();
  std::vector<int> col_min(p.dim() + 1, 0);
  for (int k = n; k >= 1; --k) col_min[p.col_of(k)] = k;
  for (int i = 1; i < n; ++i) {
    if (p.col_of(i) != p.col_of(i + 1) || p.row_of(i) == p.row_of(i + 1)) continue;
    const StepKind kind = p.row_of(i) > p.row_of(i + 1) ? StepKind::Descent : StepKind::Ascent;
    const bool proper = (i - col_min[p.col_of(i)]) % 2 == 0;
    out.push_back({i, kind, proper});
  }
  return out;
}

inline bool is_improper(const PartitionMatrix& p) {
  for (const StepEvent& e : step_events(p))
    if (e.proper) return false;
  return true;
}

// v(P): sum over columns of ceil(n_d / 2).
inline int semi_weight(const PartitionMatrix& p) {
  const auto sizes = p.column_sizes();
  int v = 0;
  for (int d = 1; d <= p.dim(); ++d) v += (sizes[d] + 1) / 2;
  return v;
}

inline bool is_nondecreasing(const PartitionMatrix& p) {
  for (int k = 1; k < p.weight(); ++k)
    if (p.row_of(k) > p.row_of(k + 1) || p.col_of(k) > p.col_of(k + 1)) return false;
  return true;
}

/// Number of irreducible diagonal blocks: 1 + #{k < dim : no cell has
/// row <= k < col}. Defined on every partition matrix.
inline int block_count(const PartitionMatrix& a) {
  int blocks = 1;
  for (int k = 1; k < a.dim(); ++k) {
    bool bridged = false;
    for (const Cell& c : a.cells())
      if (c.row <= k && k < c.col) {
        bridged = true;
        break;
      }
    if (!bridged) ++blocks;
  }
  return blocks;
}

inline int odd_count(const PartitionMatrix& b) {
  int count = 0;
  for (const Cell& c : b.cells())
    if (c.elements.size() % 2 == 1) ++count;
  return count;
}

}  // namespace partmat
