#pragma once

#include "partmat/errors.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"

#include <vector>

namespace partmat {

// Lattice-path view of nondecreasing partition matrices. Nonempty cells,
// read in row-major order, are successive nodes of a South/East/SouthEast
// path from (1,1) to (dim,dim); cell sizes become node weights.

/// Path through the nonempty cells of a nondecreasing matrix.
inline GridPath induced_path(const PartitionMatrix& a) {
  if (!is_nondecreasing(a)) throw DomainError("induced_path: matrix is not nondecreasing");
  std::vector<GridStep> steps;
  const auto& cells = a.cells();
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const int dr = cells[i].row - cells[i - 1].row;
    const int dc = cells[i].col - cells[i - 1].col;
    if (dr == 0 && dc == 1)
      steps.push_back(GridStep::East);
    else if (dr == 1 && dc == 0)
      steps.push_back(GridStep::South);
    else if (dr == 1 && dc == 1)
      steps.push_back(GridStep::SouthEast);
    else
      throw std::logic_error("induced_path: nondecreasing matrix with a non-adjacent cell pair");
  }
  return GridPath(a.dim(), std::move(steps));
}

/// Induced path with cell cardinalities as node weights. The improper flag
/// records whether every South step starts at an even weight, which for
/// nondecreasing matrices is the same as the matrix being improper.
inline WeightedGridPath weighted_path(const PartitionMatrix& b) {
  GridPath path = induced_path(b);
  std::vector<int> weights;
  for (const Cell& c : b.cells()) weights.push_back(static_cast<int>(c.elements.size()));
  bool even_south = true;
  for (std::size_t i = 0; i < path.steps().size(); ++i)
    if (path.steps()[i] == GridStep::South && weights[i] % 2 != 0) even_south = false;
  return WeightedGridPath(std::move(path), std::move(weights), even_south);
}

/// Rebuilds the nondecreasing matrix: node k gets the next weight_k integers.
inline PartitionMatrix matrix_from_weighted_path(const WeightedGridPath& w) {
  const auto nodes = w.path().nodes();
  std::vector<Cell> cells;
  int next = 1;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Cell c{nodes[i].x, nodes[i].y, {}};
    for (int k = 0; k < w.weights()[i]; ++k) c.elements.push_back(next++);
    cells.push_back(std::move(c));
  }
  return PartitionMatrix(next - 1, w.path().dim(), std::move(cells));
}

}  // namespace partmat
