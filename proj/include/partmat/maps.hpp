#pragma once

#include "partmat/errors.hpp"
#include "partmat/fishburn_matrix.hpp"
#include "partmat/induced_path.hpp"
#include "partmat/inversion_sequence.hpp"
#include "partmat/partition_matrix.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace partmat {

// ---------------------------------------------------------------------------
// Natural Fishburn matrix

inline FishburnMatrix natural_fishburn(const PartitionMatrix& p) {
  std::vector<std::vector<int>> rows(p.dim(), std::vector<int>(p.dim(), 0));
  for (const Cell& c : p.cells()) rows[c.row - 1][c.col - 1] = static_cast<int>(c.elements.size());
  return FishburnMatrix(std::move(rows));
}

// ---------------------------------------------------------------------------
// Reduction: renumber each column so that column d partitions [n_d].

inline std::optional<Violation> check_reduced_matrix(int dim, const std::vector<int>& column_sizes,
                                                     const std::vector<Cell>& cells) {
  if (dim < 1) return Violation{"dimension", "dim must be positive"};
  if (static_cast<int>(column_sizes.size()) != dim + 1)
    return Violation{"column-sizes", "expected " + std::to_string(dim) + " column sizes"};
  std::vector<std::vector<int>> seen(dim + 1);
  std::vector<bool> row_used(dim + 1, false);
  for (const Cell& c : cells) {
    if (c.row < 1 || c.col > dim || c.row > c.col)
      return Violation{"upper-triangular", "cell " + detail::cell_name(c.row, c.col) + " out of range"};
    if (c.elements.empty())
      return Violation{"empty-cell", "cell " + detail::cell_name(c.row, c.col) + " is empty"};
    row_used[c.row] = true;
    for (int k : c.elements) seen[c.col].push_back(k);
  }
  for (int d = 1; d <= dim; ++d) {
    auto& s = seen[d];
    std::sort(s.begin(), s.end());
    if (column_sizes[d] < 1 || static_cast<int>(s.size()) != column_sizes[d])
      return Violation{"column-partition", "column " + std::to_string(d) + " does not hold " +
                                               std::to_string(column_sizes[d]) + " elements"};
    for (int k = 0; k < column_sizes[d]; ++k)
      if (s[k] != k + 1)
        return Violation{"column-partition",
                         "column " + std::to_string(d) + " does not partition [" +
                             std::to_string(column_sizes[d]) + "]"};
    if (!row_used[d]) return Violation{"row-coverage", "row " + std::to_string(d) + " is empty"};
  }
  return std::nullopt;
}

class ReducedMatrix {
 public:
  // column_sizes is 1-based (index 0 unused).
  ReducedMatrix(int dim, std::vector<int> column_sizes, std::vector<Cell> cells) : dim_(dim) {
    for (Cell& c : cells) std::sort(c.elements.begin(), c.elements.end());
    if (auto v = check_reduced_matrix(dim, column_sizes, cells)) throw InvalidObject(*v);
    std::sort(cells.begin(), cells.end(),
              [](const Cell& a, const Cell& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
    sizes_ = std::move(column_sizes);
    cells_ = std::move(cells);
  }

  int dim() const noexcept { return dim_; }
  const std::vector<int>& column_sizes() const noexcept { return sizes_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }

  friend bool operator==(const ReducedMatrix&, const ReducedMatrix&) = default;

 private:
  int dim_;
  std::vector<int> sizes_;
  std::vector<Cell> cells_;
};

inline ReducedMatrix reduce(const PartitionMatrix& p) {
  const auto sizes = p.column_sizes();
  std::vector<int> offset(p.dim() + 1, 0);
  for (int d = 2; d <= p.dim(); ++d) offset[d] = offset[d - 1] + sizes[d - 1];
  std::vector<Cell> cells = p.cells();
  for (Cell& c : cells)
    for (int& k : c.elements) k -= offset[c.col];
  return ReducedMatrix(p.dim(), sizes, std::move(cells));
}

inline PartitionMatrix unreduce(const ReducedMatrix& r) {
  const auto& sizes = r.column_sizes();
  std::vector<int> offset(r.dim() + 1, 0);
  for (int d = 2; d <= r.dim(); ++d) offset[d] = offset[d - 1] + sizes[d - 1];
  std::vector<Cell> cells = r.cells();
  for (Cell& c : cells)
    for (int& k : c.elements) k += offset[c.col];
  return PartitionMatrix(offset[r.dim()] + sizes[r.dim()], r.dim(), std::move(cells));
}

// ---------------------------------------------------------------------------
// Induced inversion sequence: e_j = n_1 + ... + n_{row(j)-1}.

inline InversionSequence cdk_eta(const PartitionMatrix& p) {
  const auto sizes = p.column_sizes();
  std::vector<int> prefix(p.dim() + 1, 0);
  for (int d = 2; d <= p.dim(); ++d) prefix[d] = prefix[d - 1] + sizes[d - 1];
  std::vector<int> e(p.weight());
  for (int j = 1; j <= p.weight(); ++j) e[j - 1] = prefix[p.row_of(j)];
  return InversionSequence(std::move(e));
}

// ---------------------------------------------------------------------------
// Sign-reversing involution: swap i and i+1 at the smallest proper
// ascent/descent; improper matrices are fixed.

inline PartitionMatrix theta(const PartitionMatrix& p) {
  for (const StepEvent& ev : step_events(p)) {
    if (!ev.proper) continue;
    std::vector<int> rows(p.weight() + 1), cols(p.weight() + 1);
    for (int k = 1; k <= p.weight(); ++k) {
      rows[k] = p.row_of(k);
      cols[k] = p.col_of(k);
    }
    std::swap(rows[ev.i], rows[ev.i + 1]);
    return matrix_from_positions(p.dim(), rows, cols);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Doubling: every element k of a reduced column becomes 2k-1, 2k, and each
// column either keeps or drops its largest element. The images are exactly
// the improper matrices, 2^dim of them per source, each with semi-weight
// equal to the source weight.

using KeepVector = std::vector<bool>;

inline PartitionMatrix double_expand_one(const PartitionMatrix& p, const KeepVector& keep) {
  if (static_cast<int>(keep.size()) != p.dim())
    throw std::invalid_argument("keep vector length must equal the dimension");
  const ReducedMatrix r = reduce(p);
  std::vector<int> sizes = r.column_sizes();
  std::vector<Cell> cells;
  for (const Cell& c : r.cells()) {
    Cell d{c.row, c.col, {}};
    for (int k : c.elements) {
      d.elements.push_back(2 * k - 1);
      const bool drop = !keep[c.col - 1] && k == sizes[c.col];
      if (!drop) d.elements.push_back(2 * k);
    }
    cells.push_back(std::move(d));
  }
  for (int d = 1; d <= p.dim(); ++d) sizes[d] = 2 * sizes[d] - (keep[d - 1] ? 0 : 1);
  return unreduce(ReducedMatrix(p.dim(), std::move(sizes), std::move(cells)));
}

/// All 2^dim images, ordered by drop mask 0, 1, ..., 2^dim - 1 where bit d
/// of the mask drops the largest element of column d+1.
inline std::vector<PartitionMatrix> double_expand(const PartitionMatrix& p) {
  std::vector<PartitionMatrix> out;
  const unsigned total = 1u << p.dim();
  for (unsigned mask = 0; mask < total; ++mask) {
    KeepVector keep(p.dim());
    for (int d = 0; d < p.dim(); ++d) keep[d] = !((mask >> d) & 1u);
    out.push_back(double_expand_one(p, keep));
  }
  return out;
}

struct Contraction {
  PartitionMatrix source;
  KeepVector keep;
};

inline Contraction double_contract(const PartitionMatrix& q) {
  if (!is_improper(q)) throw DomainError("double_contract: matrix is not improper");
  const ReducedMatrix r = reduce(q);
  const auto& sizes = r.column_sizes();
  KeepVector keep(q.dim());
  std::vector<int> half(q.dim() + 1, 0);
  for (int d = 1; d <= q.dim(); ++d) {
    keep[d - 1] = sizes[d] % 2 == 0;
    half[d] = (sizes[d] + 1) / 2;
  }
  std::vector<Cell> cells;
  for (const Cell& c : r.cells()) {
    std::vector<int> elems = c.elements;
    if (!keep[c.col - 1] && elems.back() == sizes[c.col]) elems.push_back(sizes[c.col] + 1);
    if (elems.size() % 2 != 0) throw DomainError("double_contract: unpaired element in a column");
    Cell d{c.row, c.col, {}};
    for (std::size_t i = 0; i < elems.size(); i += 2) {
      if (elems[i] % 2 != 1 || elems[i + 1] != elems[i] + 1)
        throw DomainError("double_contract: elements 2k-1, 2k split across rows");
      d.elements.push_back((elems[i] + 1) / 2);
    }
    cells.push_back(std::move(d));
  }
  return {unreduce(ReducedMatrix(q.dim(), std::move(half), std::move(cells))), std::move(keep)};
}

// ---------------------------------------------------------------------------
// Parity splits of improper matrices and of the pattern class, and the
// append maps between them.

enum class ParityClass { Plus, Minus };

// Plus when n sits in a cell of even size.
inline ParityClass parity_class(const PartitionMatrix& q) {
  return q.cell_of(q.weight()).elements.size() % 2 == 0 ? ParityClass::Plus : ParityClass::Minus;
}

// Plus when the last two entries agree.
inline ParityClass parity_class(const InversionSequence& e) {
  const int n = e.length();
  return n >= 2 && e.at(n - 1) == e.at(n) ? ParityClass::Plus : ParityClass::Minus;
}

inline PartitionMatrix parity_append(const PartitionMatrix& q) {
  if (!is_improper(q) || parity_class(q) != ParityClass::Minus)
    throw DomainError("parity_append: expects an improper matrix with n in an odd-size cell");
  std::vector<Cell> cells = q.cells();
  for (Cell& c : cells)
    if (c.elements.back() == q.weight()) c.elements.push_back(q.weight() + 1);
  return PartitionMatrix(q.weight() + 1, q.dim(), std::move(cells));
}

inline PartitionMatrix parity_remove(const PartitionMatrix& q) {
  if (q.weight() < 2 || !is_improper(q) || parity_class(q) != ParityClass::Plus)
    throw DomainError("parity_remove: expects an improper matrix with n in an even-size cell");
  std::vector<Cell> cells = q.cells();
  for (Cell& c : cells)
    if (c.elements.back() == q.weight()) c.elements.pop_back();
  PartitionMatrix out(q.weight() - 1, q.dim(), std::move(cells));
  if (!is_improper(out) || parity_class(out) != ParityClass::Minus)
    throw DomainError("parity_remove: preimage leaves the Minus class");
  return out;
}

inline InversionSequence seq_append(const InversionSequence& e) {
  if (!in_pattern_class(e) || parity_class(e) != ParityClass::Minus)
    throw DomainError("seq_append: expects a pattern-class sequence with e_{n-1} != e_n");
  std::vector<int> v = e.values();
  v.push_back(v.back());
  return InversionSequence(std::move(v));
}

inline InversionSequence seq_remove(const InversionSequence& e) {
  if (!in_pattern_class(e) || parity_class(e) != ParityClass::Plus)
    throw DomainError("seq_remove: expects a pattern-class sequence with e_{n-1} = e_n");
  std::vector<int> v = e.values();
  v.pop_back();
  return InversionSequence(std::move(v));
}

}  // namespace partmat
