#include "partmat/verify.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace partmat;

TEST(Verify, RegistryIsComplete) {
  const auto& r = check_registry();
  EXPECT_EQ(r.size(), 11u);
  std::set<std::string> names;
  for (const CheckInfo& c : r) {
    names.insert(c.name);
    EXPECT_LE(c.default_bound, c.max_bound) << c.name;
    EXPECT_EQ(find_check(c.name)->id, c.id);
  }
  EXPECT_EQ(names.size(), r.size());
  EXPECT_FALSE(find_check("theorem-9-9").has_value());
}

// Every check passes at a reduced bound; the acceptance binary runs the full ones.
TEST(Verify, ChecksPassAtSmallBounds) {
  for (const CheckInfo& c : check_registry()) {
    const int bound = std::min(c.default_bound, 6);
    const CheckResult r = run_check(c.id, bound);
    EXPECT_TRUE(r.passed) << c.name << ": " << r.detail;
    EXPECT_FALSE(r.counterexample.has_value()) << c.name;
  }
}

TEST(Verify, ChecksAreDeterministic) {
  const CheckResult a = run_check(CheckId::PhiRoundtrip, 7), b = run_check(CheckId::PhiRoundtrip, 7);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.detail, b.detail);
}
