#include <gtest/gtest.h>

#include <random>
#include <set>

#include "pbtd/pbtd.hpp"
#include "support.hpp"

using namespace pbtd;
namespace pt = pbtd::testing;

namespace {

// Elements absent from columns [first, last) of row r, counted directly.
std::set<int> missing_in_row(const pt::RawGrid& g, int r, int first, int last, int v) {
  std::set<int> out;
  for (int e = 0; e < v; ++e) {
    bool seen = false;
    for (int c = first; c < last; ++c) seen |= g[r][c].first == e || g[r][c].second == e;
    if (!seen) out.insert(e);
  }
  return out;
}

std::set<int> reported(const VerificationReport& rep, Condition cond, int row) {
  std::set<int> out;
  for (const auto& v : rep.violations)
    if (v.condition == cond && v.row == row) out.insert(v.element);
  return out;
}

}  // namespace

TEST(VerifyPbtd, FixturesValid) {
  for (const auto& name : pt::fixture_names()) {
    auto rep = verify_pbtd(fixture_design(name));
    EXPECT_TRUE(rep.valid()) << name;
    EXPECT_EQ(rep.pairs_expected, static_cast<std::size_t>(pair_count(fixture(name).n * 2)));
  }
}

TEST(VerifyPbtd, SideOne) {
  PairGrid g(1, 1);
  g(0, 0) = UnorderedPair(0, 1);
  EXPECT_TRUE(verify_pbtd(g, 1).valid());
}

TEST(VerifyPbtd, ShapeError) {
  try {
    verify_pbtd(PairGrid(2, 2), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Shape);
  }
}

TEST(VerifyPbtd, SwappedCellsInFirstColumn) {
  auto t = fixture_design("f2");
  PairGrid g = t.cells();
  std::swap(g(0, 0), g(1, 0));
  auto rep = verify_pbtd(g, 11);
  EXPECT_FALSE(rep.valid());
  EXPECT_FALSE(rep.has(Condition::C1_ColumnExact));
  EXPECT_FALSE(rep.has(Condition::C0_DistinctPairs));
  EXPECT_FALSE(rep.has(Condition::C4_LastHalfCovers));

  pt::RawGrid raw = pt::raw(t);
  std::swap(raw[0][0], raw[1][0]);
  for (int r = 0; r < 11; ++r) {
    auto expected = missing_in_row(raw, r, 0, 11, 22);
    EXPECT_EQ(reported(rep, Condition::C3_FirstHalfCovers, r), expected) << "row " << r;
    if (r < 2) {
      EXPECT_FALSE(expected.empty());
    }
  }
}

TEST(VerifyPbtd, DuplicatePairReported) {
  PairGrid g = fixture_design("f1").cells();
  g(0, 1) = g(0, 0);
  auto rep = verify_pbtd(g, 9);
  EXPECT_TRUE(rep.has(Condition::C0_DistinctPairs));
  EXPECT_TRUE(rep.has(Condition::C1_ColumnExact));
  EXPECT_TRUE(rep.has(Condition::C2_RowAtMostTwo));
}

TEST(VerifyPbtd, IsPure) {
  PairGrid g = fixture_design("f3").cells();
  std::swap(g(2, 3), g(4, 5));
  const PairGrid before = g;
  auto a = verify_pbtd(g, 15);
  auto b = verify_pbtd(g, 15);
  EXPECT_EQ(a, b);
  EXPECT_EQ(g, before);
}

TEST(VerifyHowell, FixtureHalvesValid) {
  for (const auto& name : pt::fixture_names()) {
    EXPECT_TRUE(verify_howell(fixture_left(name)).valid()) << name;
    EXPECT_TRUE(verify_howell(fixture_right(name)).valid()) << name;
  }
}

TEST(VerifyHowell, EmptiedCell) {
  PairGrid g = fixture_left("f1").cells();
  ASSERT_EQ(g(0, 0), Cell(UnorderedPair(2, 16)));
  g(0, 0).reset();
  auto rep = verify_howell(g, 18);
  EXPECT_EQ(rep.count(Condition::H2_RowColumnExact), 4u);
  std::set<std::tuple<int, int, int>> got;
  for (const auto& v : rep.violations) got.insert({v.row, v.column, v.element});
  std::set<std::tuple<int, int, int>> want{{0, -1, 2}, {0, -1, 16}, {-1, 0, 2}, {-1, 0, 16}};
  EXPECT_EQ(got, want);
}

TEST(VerifyHowell, SparseGridWithBlanks) {
  PairGrid g(2, 2);
  g(0, 0) = UnorderedPair(0, 1);
  g(1, 1) = UnorderedPair(0, 1);
  auto rep = verify_howell(g, 2);
  EXPECT_TRUE(rep.has(Condition::H3_DistinctPairs));
  EXPECT_FALSE(rep.has(Condition::H2_RowColumnExact));
}

TEST(AlmostDisjoint, FixturePairs) {
  for (const auto& name : pt::fixture_names()) {
    EXPECT_TRUE(check_almost_disjoint(fixture_left(name), fixture_right(name)).valid()) << name;
  }
}

TEST(AlmostDisjoint, SelfPairOverlaps) {
  auto h = fixture_left("f1");
  auto rep = check_almost_disjoint(h, h);
  EXPECT_TRUE(rep.has(Condition::ExcessOverlap));
  EXPECT_EQ(rep.count(Condition::ExcessOverlap), 72u);
  EXPECT_TRUE(rep.has(Condition::CoverageGap));
}

TEST(AlmostDisjoint, ReusedPairLeavesGap) {
  auto left = fixture_left("f3");
  PairGrid right = fixture_right("f3").cells();
  const UnorderedPair dropped = *right(3, 2);
  right(3, 2) = left(3, 2);
  auto rep = check_almost_disjoint(left, HowellGrid(30, right));
  ASSERT_TRUE(rep.has(Condition::ExcessOverlap));
  ASSERT_EQ(rep.count(Condition::CoverageGap), 1u);
  for (const auto& v : rep.violations) {
    if (v.condition == Condition::CoverageGap) {
      EXPECT_EQ(v.pair, dropped);
    }
  }
}

TEST(AlmostDisjoint, SharedColumnMismatch) {
  auto h1 = fixture_left("f1");
  auto h2 = apply_element_permutation(fixture_right("f1"), Permutation::from_cycles(18, "(0,2)"));
  EXPECT_TRUE(check_almost_disjoint(h1, h2).has(Condition::SharedColumnMismatch));
}

TEST(SplitEquivalence, FixturesAgree) {
  for (const auto& name : pt::fixture_names()) {
    auto rep = check_split_equivalence(fixture_design(name));
    EXPECT_TRUE(rep.valid());
    EXPECT_TRUE(rep.routes_agree());
  }
}

TEST(SplitEquivalence, RandomMutationsAgreeAndFail) {
  std::mt19937 rng(2024);
  for (const auto& name : pt::fixture_names()) {
    auto t = fixture_design(name);
    for (int i = 0; i < 300; ++i) {
      auto m = pt::mutate_cell(t, rng);
      auto rep = check_split_equivalence(m);
      EXPECT_TRUE(rep.routes_agree());
      EXPECT_FALSE(rep.pbtd_route.valid());
      EXPECT_FALSE(pt::naive_is_pbtd(pt::raw(m), m.n()));
    }
  }
}

TEST(SplitEquivalence, RandomSwapsMatchNaiveChecker) {
  std::mt19937 rng(99);
  for (const auto& name : pt::fixture_names()) {
    auto t = fixture_design(name);
    for (int i = 0; i < 200; ++i) {
      PairGrid g = t.cells();
      std::uniform_int_distribution<int> row(0, t.rows() - 1);
      std::uniform_int_distribution<int> col(0, t.cols() - 1);
      std::swap(g(row(rng), col(rng)), g(row(rng), col(rng)));
      PBTDesign m(t.n(), g);
      auto rep = check_split_equivalence(m);
      EXPECT_TRUE(rep.routes_agree());
      EXPECT_EQ(rep.pbtd_route.valid(), pt::naive_is_pbtd(pt::raw(m), m.n()));
    }
  }
}

TEST(SplitEquivalence, SmallRandomGrids) {
  std::mt19937 rng(5);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 500; ++i) {
      PairGrid g(n, 2 * n - 1);
      std::uniform_int_distribution<int> pick(0, pair_count(2 * n) - 1);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < 2 * n - 1; ++c) g(r, c) = UnorderedPair::from_index(pick(rng));
      PBTDesign t(n, g);
      auto rep = check_split_equivalence(t);
      EXPECT_TRUE(rep.routes_agree());
      EXPECT_EQ(rep.pbtd_route.valid(), pt::naive_is_pbtd(pt::raw(t), n));
    }
  }
}
