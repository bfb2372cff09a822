#include "fixtures.hpp"

#include "partmat/enumerate.hpp"
#include "partmat/identities.hpp"
#include "partmat/io.hpp"
#include "partmat/maps.hpp"

#include <gtest/gtest.h>

using namespace partmat;

namespace {

template <class T, class Parse>
void expect_round_trip(const T& obj, Parse parse) {
  const std::string text = to_json(obj).dump();
  EXPECT_EQ(parse(parse_json(text)), obj) << text;
  EXPECT_EQ(to_json(parse(parse_json(text))).dump(), text);
}

bool rejected(const std::string& text) {
  try {
    partition_matrix_from_json(parse_json(text));
  } catch (const InvalidObject& e) {
    return !e.violation().invariant.empty();
  }
  return false;
}

}  // namespace

TEST(Io, PartitionMatrixFormat) {
  EXPECT_EQ(to_json(fixtures::one_cell(3)).dump(), R"({"n":3,"dim":1,"cells":[{"row":1,"col":1,"set":[1,2,3]}]})");
  for (int n = 1; n <= 5; ++n)
    for_each(partition_matrices(n), [](const PartitionMatrix& p) { expect_round_trip(p, partition_matrix_from_json); });
}

TEST(Io, OtherObjects) {
  for_each(fishburn_matrices(5), [](const FishburnMatrix& a) { expect_round_trip(a, fishburn_matrix_from_json); });
  for_each(inversion_sequences(5),
           [](const InversionSequence& e) { expect_round_trip(e, inversion_sequence_from_json); });
  for_each(motzkin_words(6), [](const MotzkinWord& m) { expect_round_trip(m, motzkin_word_from_json); });
  for_each(dyck_words(4), [](const DyckWord& w) { expect_round_trip(w, dyck_word_from_json); });
  for_each(grid_paths(4), [](const GridPath& g) { expect_round_trip(g, grid_path_from_json); });
  for_each(weighted_grid_paths(6, true),
           [](const WeightedGridPath& w) { expect_round_trip(w, weighted_grid_path_from_json); });
  EXPECT_EQ(to_json(InversionSequence({0, 1, 1})).dump(), R"({"e":[0,1,1]})");
  EXPECT_EQ(to_json(MotzkinWord("ULD")).dump(), R"({"word":"ULD"})");
}

TEST(Io, PolynomialsAndSeries) {
  EXPECT_EQ(to_json(s_poly_inv(4)).dump(), R"({"var":"q","coeffs":["15","7","2"]})");
  const QPolynomial big = QPolynomial::monomial(2, from_decimal("123456789012345678901234567890")) + QPolynomial{-3};
  EXPECT_EQ(polynomial_from_json(to_json(big)), big);
  EXPECT_TRUE(polynomial_from_json(to_json(QPolynomial())).is_zero());
  const TruncatedSeries s = motzkin_stat_enumerated(6);
  EXPECT_EQ(series_from_json(to_json(s)), s);
  EXPECT_EQ(to_json(series_from_json(to_json(s))).dump(), to_json(s).dump());
  EXPECT_THROW(series_from_json(parse_json(R"({"T":2,"terms":[{"t":1,"mono":{"q":1},"coeff":"1"}]})")),
               InvalidObject);
  EXPECT_THROW(polynomial_from_json(parse_json(R"({"var":"q","coeffs":["x1"]})")), InvalidObject);
}

TEST(Io, MalformedInputIsInvalidObject) {
  EXPECT_THROW(parse_json("{"), InvalidObject);
  EXPECT_THROW(partition_matrix_from_json(parse_json(R"({"n":2})")), InvalidObject);
  EXPECT_THROW(partition_matrix_from_json(parse_json(R"({"n":"2","dim":1,"cells":[]})")), InvalidObject);
  EXPECT_TRUE(rejected(R"({"n":2,"dim":1,"cells":[{"row":1,"col":1,"set":[1]}]})"));
  EXPECT_TRUE(rejected(R"({"n":2,"dim":2,"cells":[{"row":2,"col":1,"set":[1]},{"row":1,"col":2,"set":[2]}]})"));
  EXPECT_FALSE(rejected(R"({"n":1,"dim":1,"cells":[{"row":1,"col":1,"set":[1]}]})"));
  EXPECT_THROW(inversion_sequence_from_json(parse_json(R"({"e":[0,2]})")), InvalidObject);
  EXPECT_THROW(motzkin_word_from_json(parse_json(R"({"word":"UUD"})")), InvalidObject);
  EXPECT_THROW(dyck_word_from_json(parse_json(R"({"dyck":"DA"})")), InvalidObject);
  EXPECT_THROW(grid_path_from_json(parse_json(R"({"dim":2,"steps":"SE"})")), InvalidObject);
  EXPECT_THROW(fishburn_matrix_from_json(parse_json(R"({"dim":2,"rows":[[1,0],[0,0]]})")), InvalidObject);
}
