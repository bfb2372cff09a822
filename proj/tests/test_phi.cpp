#include "fixtures.hpp"

#include "partmat/enumerate.hpp"
#include "partmat/phi.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace partmat;
using fixtures::make;

TEST(Phi, SmallCases) {
  EXPECT_EQ(phi(fixtures::one_cell(1)).word(), "L");
  EXPECT_EQ(phi(fixtures::one_cell(2)).word(), "UD");
  EXPECT_EQ(phi(make(2, 2, {{1, 1, {1}}, {2, 2, {2}}})).word(), "LL");
  EXPECT_EQ(phi_inv(MotzkinWord("UD")), fixtures::one_cell(2));
}

TEST(Phi, WorkedExamples) {
  const PartitionMatrix b4 = make(4, 2, {{1, 1, {1}}, {1, 2, {2, 3}}, {2, 2, {4}}});
  EXPECT_EQ(phi(b4).word(), "ULLD");
  EXPECT_EQ(phi_inv(MotzkinWord("ULLD")), b4);
  const PartitionMatrix b6 = make(6, 2, {{1, 1, {1}}, {1, 2, {2, 3, 4, 5}}, {2, 2, {6}}});
  EXPECT_EQ(phi(b6).word(), "UULLDD");
  EXPECT_EQ(phi_inv(MotzkinWord("UULLDD")), b6);
}

TEST(Phi, RejectsOutsideDomain) {
  EXPECT_THROW(phi(fixtures::sample8()), DomainError);
  // Nondecreasing but with a proper descent.
  EXPECT_THROW(phi(make(3, 2, {{1, 1, {1}}, {1, 2, {2}}, {2, 2, {3}}})), DomainError);
}

TEST(Phi, BijectionCarriesStatistics) {
  for (int n = 1; n <= 12; ++n) {
    std::set<std::string> words;
    std::size_t sources = 0;
    for_each(nondecreasing_matrices(n, true), [&](const PartitionMatrix& b) {
      ++sources;
      const MotzkinWord m = phi(b);
      ASSERT_EQ(m.length(), n);
      const MotzkinStats s = motzkin_stats(m);
      EXPECT_EQ(s.comp, block_count(b));
      EXPECT_EQ(s.level, odd_count(b));
      EXPECT_EQ(phi_inv(m), b);
      words.insert(m.word());
    });
    EXPECT_EQ(words.size(), sources);
    EXPECT_EQ(sources, count(motzkin_words(n))) << n;
  }
}

TEST(Phi, InverseIsSurjectiveOntoMotzkinWords) {
  for (int n = 1; n <= 10; ++n)
    for_each(motzkin_words(n), [&](const MotzkinWord& m) {
      const PartitionMatrix b = phi_inv(m);
      EXPECT_TRUE(is_nondecreasing(b));
      EXPECT_TRUE(is_improper(b));
      EXPECT_EQ(phi(b), m);
    });
}
