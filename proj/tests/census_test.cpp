#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace fillperm;

namespace {

EnumerateOptions single(unsigned threads = 1) {
  EnumerateOptions o;
  o.single_cycle = true;
  o.threads = threads;
  return o;
}

}  // namespace

TEST(Enumerate, GenusOne) {
  const auto s = enumerate_filling(1, single());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0], parse_cycles("(1,2,3,4)", 4));
  EXPECT_EQ(s[1], parse_cycles("(1,4,3,2)", 4));
}

TEST(Enumerate, NoGenusTwo) { EXPECT_TRUE(enumerate_filling(3, single()).empty()); }

TEST(Enumerate, AllCycleCounts) {
  EXPECT_EQ(enumerate_filling(1).size(), 2u);
  const auto two = enumerate_filling(2);
  EXPECT_EQ(two.size(), 8u);
  int four = 0, twos = 0;
  for (const auto& p : two) {
    const auto c = cycle_count(p);
    four += c == 4;
    twos += c == 2;
  }
  EXPECT_EQ(four, 4);
  EXPECT_EQ(twos, 4);
  const auto three = enumerate_filling(3);
  EXPECT_EQ(three.size(), 48u);
  for (const auto& p : three) EXPECT_EQ(cycle_count(p), 3u);
}

TEST(Enumerate, ExhaustiveSolutionsValidate) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_filling(n)) {
      const auto fp = validate(p);
      EXPECT_TRUE(power(compose(opposite_map(n), p), 4).is_identity());
      EXPECT_EQ((n - region_count(fp)) % 2, 0);
    }
  }
}

TEST(Enumerate, Threaded) { EXPECT_EQ(enumerate_filling(3, single(4)), enumerate_filling(3, single(1))); }

TEST(Enumerate, Bound) {
  EnumerateOptions o;
  o.max_n = 2;
  EXPECT_THROW(enumerate_filling(3, o), BoundExceeded);
}

TEST(CountOrbits, SmallCases) {
  EXPECT_EQ(count_orbits(1).orbits, 1u);
  EXPECT_EQ(count_orbits(3).orbits, 0u);
  EXPECT_THROW(count_orbits(2), PreconditionError);
}

TEST(CountOrbits, GenusThree) {
  const auto c = count_orbits(5);
  EXPECT_EQ(c.raw, 600u);
  EXPECT_EQ(c.orbits, 5u);
  EXPECT_LE(c.orbits, 672u);
  for (const auto& r : c.records) {
    EXPECT_EQ(r.genus, 3);
    EXPECT_EQ(r.c, 1);
  }
}

TEST(CountOrbits, AllCycleOrbits) {
  EXPECT_EQ(census_records(enumerate_filling(2), 2).size(), 2u);
  EXPECT_EQ(census_records(enumerate_filling(3), 3).size(), 2u);
}

TEST(UpperBound, Values) {
  EXPECT_EQ(upper_bound(3), 672);
  EXPECT_EQ(upper_bound(4), 84480);
  for (int g = 3; g < 12; ++g) EXPECT_LT(upper_bound(g), upper_bound(g + 1));
  EXPECT_THROW(upper_bound(2), PreconditionError);
  EXPECT_EQ(upper_bound(20).str(), "283751373105773071236185940408449950973605969920000000000");
}

TEST(Closure, SmallCases) {
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(closed_under_twists(enumerate_filling(n), n));
  std::vector<Permutation> partial{parse_cycles("(1,2,3,4)", 4)};
  EXPECT_FALSE(closed_under_twists(partial, 1));
}

TEST(Jsonl, SortedRecords) {
  const auto r = count_orbits(1).records;
  std::ostringstream os;
  write_jsonl(os, r);
  EXPECT_EQ(os.str(),
            "{\"c\":1,\"canonical_form\":\"(1,2,3,4)\",\"decomposable\":false,\"genus\":1,\"n\":1,\"orbit_size_raw\":2}\n");
}

TEST(F4, AmongGenusFourSolutions) {
  const auto solutions = enumerate_filling(7, single(std::max(1u, std::thread::hardware_concurrency())));
  EXPECT_TRUE(std::binary_search(solutions.begin(), solutions.end(), fixtures::F4().sigma()));
  const auto records = census_records(solutions, 7);
  EXPECT_LE(records.size(), 84480u);
  std::size_t raw = 0;
  for (const auto& r : records) raw += r.orbit_size_raw;
  EXPECT_EQ(raw, solutions.size());
}
