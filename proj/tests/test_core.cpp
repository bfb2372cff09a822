#include "fixtures.hpp"
#include "oracles.hpp"

#include "partmat/enumerate.hpp"
#include "partmat/fishburn_matrix.hpp"
#include "partmat/induced_path.hpp"
#include "partmat/inversion_sequence.hpp"
#include "partmat/partition_matrix.hpp"
#include "partmat/paths.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace partmat;
using fixtures::make;

namespace {

std::string violation_of(int n, int dim, std::vector<Cell> cells) {
  auto v = check_partition_matrix(n, dim, cells);
  return v ? v->invariant : "ok";
}

}  // namespace

// ---------------------------------------------------------------------------
// validation

TEST(Validate, SampleMatrixIsValid) {
  const auto p = fixtures::sample8();
  EXPECT_EQ(violation_of(8, 4, p.cells()), "ok");
  EXPECT_EQ(p.weight(), 8);
  EXPECT_EQ(p.dim(), 4);
}

TEST(Validate, MergingSevenAndEightEmptiesARow) {
  // Merged into (3,4) row 4 is empty; merged into (4,4) row 3 is empty.
  EXPECT_EQ(violation_of(8, 4, {{1, 1, {1}}, {1, 3, {4, 5}}, {2, 2, {2, 3}}, {2, 3, {6}}, {3, 4, {7, 8}}}),
            "row-coverage");
  EXPECT_EQ(violation_of(8, 4, {{1, 1, {1}}, {1, 3, {4, 5}}, {2, 2, {2, 3}}, {2, 3, {6}}, {4, 4, {7, 8}}}),
            "row-coverage");
}

TEST(Validate, ColumnMonotone) {
  EXPECT_EQ(violation_of(2, 2, {{1, 1, {2}}, {2, 2, {1}}}), "column-monotone");
}

TEST(Validate, OtherViolations) {
  EXPECT_EQ(violation_of(2, 2, {{2, 1, {1}}, {2, 2, {2}}}), "upper-triangular");
  EXPECT_EQ(violation_of(2, 1, {{1, 1, {1}}}), "partition-cover");
  EXPECT_EQ(violation_of(2, 1, {{1, 1, {1, 3}}}), "element-range");
  EXPECT_EQ(violation_of(1, 1, {{1, 1, {}}}), "empty-cell");
  EXPECT_EQ(violation_of(2, 1, {{1, 1, {1}}, {1, 1, {1, 2}}}), "disjoint");
  EXPECT_EQ(violation_of(2, 2, {{1, 1, {1}}, {1, 2, {2}}}), "row-coverage");
  EXPECT_EQ(violation_of(0, 1, {}), "weight");
  EXPECT_EQ(violation_of(1, 0, {}), "dimension");
  EXPECT_THROW(make(2, 2, {{1, 1, {2}}, {2, 2, {1}}}), InvalidObject);
}

TEST(Validate, ConstructorSortsElementsAndCells) {
  const auto p = make(3, 2, {{2, 2, {3}}, {1, 1, {2, 1}}});
  EXPECT_EQ(p.cells().front().elements, (std::vector<int>{1, 2}));
  EXPECT_EQ(p.cells().back().row, 2);
}

TEST(Validate, FishburnMatrix) {
  EXPECT_FALSE(check_fishburn_matrix({{1, 0, 2, 0}, {0, 2, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}}));
  EXPECT_TRUE(check_fishburn_matrix({{1, 0}, {0, 0}}));
  EXPECT_TRUE(check_fishburn_matrix({{1, 1}, {1, 1}}));
  EXPECT_TRUE(check_fishburn_matrix({{1, -1}, {0, 1}}));
  EXPECT_THROW(FishburnMatrix(std::vector<std::vector<int>>{{0}}), InvalidObject);
}

TEST(Validate, InversionSequence) {
  EXPECT_FALSE(check_inversion_sequence({0, 1, 2}));
  EXPECT_TRUE(check_inversion_sequence({1}));
  EXPECT_TRUE(check_inversion_sequence({0, 2}));
  EXPECT_TRUE(check_inversion_sequence({}));
}

TEST(Validate, Words) {
  EXPECT_NO_THROW(MotzkinWord("UUDLDLUD"));
  EXPECT_THROW(MotzkinWord("DU"), InvalidObject);
  EXPECT_THROW(MotzkinWord("UU"), InvalidObject);
  EXPECT_THROW(MotzkinWord(""), InvalidObject);
  EXPECT_THROW(MotzkinWord("UXD"), InvalidObject);
  EXPECT_THROW(dyck_from_letters("DA"), InvalidObject);
  EXPECT_THROW(grid_path_from_letters(2, "S"), InvalidObject);
  EXPECT_THROW(grid_path_from_letters(2, "E"), InvalidObject);
  EXPECT_NO_THROW(grid_path_from_letters(2, "ES"));
  EXPECT_THROW(WeightedGridPath(grid_path_from_letters(2, "ES"), {1, 1, 1}, true), InvalidObject);
  EXPECT_NO_THROW(WeightedGridPath(grid_path_from_letters(2, "ES"), {1, 2, 1}, true));
  EXPECT_THROW(WeightedGridPath(grid_path_from_letters(2, "ES"), {1, 0, 1}), InvalidObject);
}

// ---------------------------------------------------------------------------
// statistics on the sample matrix

TEST(Statistics, Locate) {
  const auto p = fixtures::sample8();
  EXPECT_EQ(locate(p, 5), (Position{1, 3}));
  EXPECT_EQ(locate(p, 7), (Position{4, 4}));
  EXPECT_EQ(locate(fixtures::one_cell(1), 1), (Position{1, 1}));
  EXPECT_THROW(locate(p, 9), std::out_of_range);
  EXPECT_THROW(locate(p, 0), std::out_of_range);
}

TEST(Statistics, Inversions) {
  const auto p = fixtures::sample8();
  EXPECT_EQ(inversions(p), (std::vector<std::pair<int, int>>{{8, 7}}));
  EXPECT_EQ(inv(p), 1);
  EXPECT_TRUE(inversions(fixtures::one_cell(3)).empty());
}

TEST(Statistics, StepEvents) {
  const auto p = fixtures::sample8();
  EXPECT_EQ(step_events(p), (std::vector<StepEvent>{{5, StepKind::Ascent, false}, {7, StepKind::Descent, true}}));
  EXPECT_TRUE(step_events(make(2, 2, {{1, 1, {1}}, {2, 2, {2}}})).empty());
  EXPECT_EQ(step_events(make(3, 2, {{1, 1, {1}}, {1, 2, {3}}, {2, 2, {2}}})),
            (std::vector<StepEvent>{{2, StepKind::Descent, true}}));
}

TEST(Statistics, Improper) {
  EXPECT_TRUE(is_improper(fixtures::one_cell(3)));
  EXPECT_FALSE(is_improper(make(3, 2, {{1, 1, {1}}, {1, 2, {2}}, {2, 2, {3}}})));
  EXPECT_FALSE(is_improper(fixtures::sample8()));
}

TEST(Statistics, SemiWeight) {
  EXPECT_EQ(semi_weight(fixtures::one_cell(3)), 2);
  EXPECT_EQ(semi_weight(make(3, 3, {{1, 1, {1}}, {2, 2, {2}}, {3, 3, {3}}})), 3);
  EXPECT_EQ(semi_weight(make(3, 2, {{1, 1, {1}}, {2, 2, {2, 3}}})), 2);
}

TEST(Statistics, Nondecreasing) {
  EXPECT_FALSE(is_nondecreasing(fixtures::sample8()));
  EXPECT_TRUE(is_nondecreasing(fixtures::one_cell(3)));
  EXPECT_TRUE(is_nondecreasing(fixtures::staircase10()));
}

TEST(Statistics, BlocksAndOdd) {
  EXPECT_EQ(block_count(fixtures::one_cell(3)), 1);
  EXPECT_EQ(odd_count(make(3, 2, {{1, 1, {1}}, {2, 2, {2, 3}}})), 1);
  EXPECT_EQ(odd_count(make(3, 3, {{1, 1, {1}}, {2, 2, {2}}, {3, 3, {3}}})), 3);
  EXPECT_EQ(odd_count(fixtures::sample8()), 4);
}

TEST(Statistics, BlocksOfTheFiveNondecreasingMatricesOfWeightThree) {
  std::vector<int> blk;
  for_each(nondecreasing_matrices(3, false), [&](const PartitionMatrix& a) { blk.push_back(block_count(a)); });
  EXPECT_EQ(blk, (std::vector<int>{1, 1, 2, 2, 3}));
}

TEST(Statistics, Dist) {
  EXPECT_EQ(dist(InversionSequence({0})), 1);
  EXPECT_EQ(dist(InversionSequence({0, 1, 2})), 3);
  std::map<int, int> poly;
  for_each(pattern_class(3), [&](const InversionSequence& e) { ++poly[dist(e)]; });
  EXPECT_EQ(poly, (std::map<int, int>{{2, 3}, {3, 1}}));
}

TEST(Statistics, PatternClass) {
  EXPECT_TRUE(in_pattern_class(InversionSequence({0, 0, 1})));
  EXPECT_FALSE(in_pattern_class(InversionSequence({0, 1, 0})));
  EXPECT_TRUE(in_pattern_class(InversionSequence({0})));
  EXPECT_FALSE(in_pattern_class(InversionSequence({0, 0, 0})));
}

TEST(Statistics, Motzkin) {
  EXPECT_EQ(motzkin_stats(MotzkinWord("UUDLDLUD")), (MotzkinStats{8, 3, 2, 3, 3}));
  EXPECT_EQ(motzkin_stats(MotzkinWord("L")), (MotzkinStats{1, 1, 1, 0, 0}));
  std::multiset<std::pair<int, int>> joint;
  for_each(motzkin_words(3), [&](const MotzkinWord& m) {
    const auto s = motzkin_stats(m);
    joint.insert({s.comp, s.level});
  });
  EXPECT_EQ(joint, (std::multiset<std::pair<int, int>>{{3, 3}, {2, 1}, {2, 1}, {1, 1}}));
}

TEST(Statistics, InducedPathOfStaircase) {
  const GridPath g = induced_path(fixtures::staircase10());
  EXPECT_EQ(g.letters(), "EESXS");
  EXPECT_EQ(g.nodes(), (std::vector<Node>{{1, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 4}}));
  // The single SouthEast step (2,3)->(3,4) ends off the diagonal.
  EXPECT_EQ(grid_path_stats(g), (GridPathStats{2, 2, 1, 1, 0}));
  EXPECT_EQ(block_count(fixtures::staircase10()), 1);
  EXPECT_EQ(grid_path_stats(GridPath(1, {})), GridPathStats{});
}

TEST(Statistics, GridPathsAreLetterwiseMotzkinWords) {
  for (int dim = 1; dim <= 7; ++dim) {
    std::set<std::string> words;
    for_each(grid_paths(dim), [&](const GridPath& g) {
      const std::string w = grid_path_motzkin_letters(g);
      int down_or_level = 0, h = 0, on_axis = 0;
      for (char c : w) {
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        ASSERT_GE(h, 0);
        down_or_level += c != 'U';
        on_axis += c != 'U' && h == 0;
      }
      EXPECT_EQ(h, 0);
      EXPECT_EQ(down_or_level, dim - 1);
      const auto s = grid_path_stats(g);
      EXPECT_EQ(on_axis, s.diag_south + s.diag_southeast);
      words.insert(w);
    });
    EXPECT_EQ(words.size(), oracle::grid_path_count(dim));
  }
}

TEST(Statistics, DyckTouch) {
  EXPECT_EQ(dyck_touch(dyck_from_letters("AD")), 1);
  std::multiset<int> touches;
  for_each(dyck_words(3), [&](const DyckWord& w) { touches.insert(dyck_touch(w)); });
  EXPECT_EQ(touches, (std::multiset<int>{1, 1, 2, 2, 3}));
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(count(dyck_words(n)), oracle::catalan(n)) << n;
}

// ---------------------------------------------------------------------------
// properties over whole families

TEST(Properties, InversionsMatchAllPairsOracle) {
  for (int n = 1; n <= 6; ++n)
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      oracle::RawMatrix raw{p.weight(), p.dim(), {}};
      for (const Cell& c : p.cells()) raw.cells[{c.row, c.col}] = c.elements;
      EXPECT_EQ(inv(p), oracle::inv(raw));
      EXPECT_EQ(static_cast<int>(inversions(p).size()), inv(p));
      for (auto [i, j] : inversions(p)) {
        EXPECT_GT(i, j);
        EXPECT_EQ(p.col_of(i), p.col_of(j));
        EXPECT_LT(p.row_of(i), p.row_of(j));
      }
    });
}

TEST(Properties, ColumnsAreConsecutiveRanges) {
  for (int n = 1; n <= 6; ++n)
    for_each(partition_matrices(n), [&](const PartitionMatrix& p) {
      int total = 0;
      for (const Cell& c : p.cells()) total += static_cast<int>(c.elements.size());
      EXPECT_EQ(total, n);
      for (int k = 1; k < n; ++k) EXPECT_LE(p.col_of(k), p.col_of(k + 1));
      EXPECT_FALSE(check_partition_matrix(p.weight(), p.dim(), p.cells()));
    });
}

TEST(Properties, ImproperMatricesHaveEvenInv) {
  for (int n = 1; n <= 8; ++n)
    for_each(improper_matrices(n, Strategy::Filter), [&](const PartitionMatrix& p) { ASSERT_EQ(inv(p) % 2, 0); });
}

TEST(Properties, BlocksCountDiagonalSouthEastSteps) {
  for (int n = 1; n <= 10; ++n)
    for_each(nondecreasing_matrices(n, false), [&](const PartitionMatrix& a) {
      ASSERT_EQ(block_count(a) - 1, grid_path_stats(induced_path(a)).diag_southeast);
    });
}

TEST(Properties, OddCellsEqualOddColumnsOnNondecreasingImproper) {
  for (int n = 1; n <= 9; ++n)
    for_each(nondecreasing_matrices(n, true), [&](const PartitionMatrix& b) {
      const auto sizes = b.column_sizes();
      int odd_columns = 0;
      for (int d = 1; d <= b.dim(); ++d) odd_columns += sizes[d] % 2;
      ASSERT_EQ(odd_count(b), odd_columns);
    });
}

TEST(Properties, DistBounds) {
  for (int n = 1; n <= 7; ++n)
    for_each(inversion_sequences(n), [&](const InversionSequence& e) {
      const int d = dist(e);
      EXPECT_GE(d, 1);
      EXPECT_LE(d, n);
      EXPECT_EQ(d, oracle::distinct(e.values()));
      std::set<int> s(e.values().begin(), e.values().end());
      EXPECT_EQ(d == n, static_cast<int>(s.size()) == n);
    });
}

TEST(Properties, PatternClassMatchesTripleDefinition) {
  for (int n = 1; n <= 8; ++n)
    for (const auto& e : oracle::all_inversion_sequences(n))
      ASSERT_EQ(in_pattern_class(InversionSequence(e)), oracle::avoids_pattern(e));
}

TEST(Properties, MotzkinHeightsNeverNegative) {
  for (int n = 1; n <= 9; ++n)
    for_each(motzkin_words(n), [&](const MotzkinWord& m) {
      int h = 0, axis = 0;
      for (char c : m.word()) {
        h += c == 'U' ? 1 : c == 'D' ? -1 : 0;
        ASSERT_GE(h, 0);
        axis += h == 0;
      }
      EXPECT_EQ(axis, motzkin_stats(m).comp);
    });
}
