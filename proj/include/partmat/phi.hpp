#pragma once

#include "partmat/errors.hpp"
#include "partmat/induced_path.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace partmat {

// Bijection between nondecreasing improper matrices of weight n and Motzkin
// words of length n, computed on the weighted induced path. Blocks split at
// diagonal SouthEast steps and concatenate; a single block of dimension D
// wraps U ... D around the image of a weight n-2 path obtained by removing
// two units near the corner (D-1, D).

namespace detail {

struct WNode {
  int x;
  int y;
  int w;
};

using WPath = std::vector<WNode>;

inline WPath wpath_of(const PartitionMatrix& b) {
  const WeightedGridPath wp = weighted_path(b);
  const auto nodes = wp.path().nodes();
  WPath out;
  for (std::size_t i = 0; i < nodes.size(); ++i) out.push_back({nodes[i].x, nodes[i].y, wp.weights()[i]});
  return out;
}

inline PartitionMatrix matrix_of(const WPath& p) {
  std::vector<GridStep> steps;
  std::vector<int> weights{p.front().w};
  for (std::size_t i = 1; i < p.size(); ++i) {
    const int dx = p[i].x - p[i - 1].x, dy = p[i].y - p[i - 1].y;
    if (dx == 0 && dy == 1)
      steps.push_back(GridStep::East);
    else if (dx == 1 && dy == 0)
      steps.push_back(GridStep::South);
    else if (dx == 1 && dy == 1)
      steps.push_back(GridStep::SouthEast);
    else
      throw std::logic_error("phi: nodes are not adjacent");
    weights.push_back(p[i].w);
  }
  return matrix_from_weighted_path(WeightedGridPath(GridPath(p.back().x, std::move(steps)), std::move(weights), true));
}

inline bool diag_se(const WPath& p, std::size_t i) {
  return p[i].x == p[i].y && p[i + 1].x == p[i].x + 1 && p[i + 1].y == p[i].y + 1;
}

inline std::string phi_rec(WPath p) {
  const int dim = p.back().x;
  if (p.size() == 1) {
    const int m = p[0].w / 2;
    return std::string(m, 'U') + (p[0].w % 2 ? "L" : "") + std::string(m, 'D');
  }
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    if (!diag_se(p, i)) continue;
    WPath first(p.begin(), p.begin() + i + 1), second(p.begin() + i + 1, p.end());
    const int s = p[i].x;
    for (WNode& v : second) v.x -= s, v.y -= s;
    return phi_rec(std::move(first)) + phi_rec(std::move(second));
  }
  // One block, dim >= 2: the path ends ... -> (D-1, D) -> (D, D).
  const std::size_t k = p.size() - 2;
  if (p[k].w >= 4) {
    p[k].w -= 2;
  } else if (p[k - 1].x == dim - 1 && p[k - 1].y == dim - 1) {
    p.erase(p.begin() + k);
  } else {
    std::size_t j = 0;  // node (s, s+1) for the largest s <= D-2
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i].x == p[i].y && p[i].x <= dim - 2 && p[i + 1].x == p[i].x && p[i + 1].y == p[i].y + 1) j = i + 1;
    for (std::size_t i = j; i < k; ++i) ++p[i].x;
    p.erase(p.begin() + k);
  }
  return "U" + phi_rec(std::move(p)) + "D";
}

inline WPath phi_inv_rec(const std::string& m) {
  int h = 0;
  std::size_t last = 0;  // start of the last component
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    h += m[i] == 'U' ? 1 : m[i] == 'D' ? -1 : 0;
    if (h == 0) last = i + 1;
  }
  if (last > 0) {
    WPath first = phi_inv_rec(m.substr(0, last));
    WPath second = phi_inv_rec(m.substr(last));
    const int s = first.back().x;
    for (WNode v : second) first.push_back({v.x + s, v.y + s, v.w});
    return first;
  }
  if (m == "L") return {{1, 1, 1}};
  if (m == "UD") return {{1, 1, 2}};
  WPath p = phi_inv_rec(m.substr(1, m.size() - 2));
  const int n = static_cast<int>(m.size());
  if (p.size() == 1) return {{1, 1, n}};
  const int dim = p.back().x;
  std::size_t first_diag = p.size();
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (diag_se(p, i)) {
      first_diag = i;
      break;
    }
  if (first_diag == p.size()) {
    p[p.size() - 2].w += 2;
  } else if (p[first_diag].x == dim - 1) {
    p.insert(p.end() - 1, WNode{dim - 1, dim, 2});
  } else {
    for (std::size_t i = first_diag + 1; i + 1 < p.size(); ++i) --p[i].x;
    p.insert(p.end() - 1, WNode{dim - 1, dim, 2});
  }
  return p;
}

}  // namespace detail

inline MotzkinWord phi(const PartitionMatrix& b) {
  if (!is_nondecreasing(b) || !is_improper(b))
    throw DomainError("phi: matrix is not nondecreasing and improper");
  return MotzkinWord(detail::phi_rec(detail::wpath_of(b)));
}

inline PartitionMatrix phi_inv(const MotzkinWord& m) { return detail::matrix_of(detail::phi_inv_rec(m.word())); }

}  // namespace partmat
