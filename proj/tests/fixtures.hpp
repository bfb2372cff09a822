#pragma once

#include "partmat/io.hpp"
#include "partmat/partition_matrix.hpp"

#include <ostream>

// Readable gtest failure output.
namespace partmat {
inline void PrintTo(const PartitionMatrix& p, std::ostream* os) { *os << to_json(p).dump(); }
inline void PrintTo(const FishburnMatrix& a, std::ostream* os) { *os << to_json(a).dump(); }
inline void PrintTo(const InversionSequence& e, std::ostream* os) { *os << to_json(e).dump(); }
inline void PrintTo(const MotzkinWord& m, std::ostream* os) { *os << m.word(); }
inline void PrintTo(const QPolynomial& p, std::ostream* os) { *os << to_string(p, "q"); }
}  // namespace partmat

namespace fixtures {

inline partmat::PartitionMatrix make(int n, int dim, std::vector<partmat::Cell> cells) {
  return partmat::PartitionMatrix(n, dim, std::move(cells));
}

// Dimension 4, weight 8, with an improper ascent at 5 and a proper descent at 7.
inline partmat::PartitionMatrix sample8() {
  return make(8, 4, {{1, 1, {1}}, {1, 3, {4, 5}}, {2, 2, {2, 3}}, {2, 3, {6}}, {3, 4, {8}}, {4, 4, {7}}});
}

// Nondecreasing, dimension 4, weight 10.
inline partmat::PartitionMatrix staircase10() {
  return make(10, 4, {{1, 1, {1}}, {1, 2, {2, 3}}, {1, 3, {4, 5}}, {2, 3, {6}}, {3, 4, {7, 8}}, {4, 4, {9, 10}}});
}

inline partmat::PartitionMatrix one_cell(int n) {
  std::vector<int> all;
  for (int k = 1; k <= n; ++k) all.push_back(k);
  return make(n, 1, {{1, 1, all}});
}

}  // namespace fixtures
