#include <gtest/gtest.h>

#include <map>

#include "pbtd/pbtd.hpp"
#include "support.hpp"

using namespace pbtd;
namespace pt = pbtd::testing;

namespace {

std::size_t free_in_odd_columns(const OrbitTemplate& t) {
  std::size_t k = 0;
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 1; c < t.cols(); c += 2) k += t.slots()(r, c).kind == Slot::Kind::Free;
  return k;
}

}  // namespace

TEST(Sigma, Shape) {
  auto s = sigma_template(9);
  EXPECT_EQ(s.rows(), 9);
  EXPECT_EQ(s.cols(), 8);
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(s.pi()(2), 3);
  EXPECT_EQ(s.pi()(17), 16);
  EXPECT_EQ(s.free_slot_count(), 36u);
  EXPECT_EQ(s.image_slot_count(), 36u);
}

TEST(Sigma, FixtureHalves) {
  auto check = [](const std::string& name, bool left, bool right) {
    auto t = fixture_design(name);
    auto s = split(t);
    auto tmpl = sigma_template(t.n());
    EXPECT_EQ(matches_template(s.left, tmpl), left) << name << " left";
    EXPECT_EQ(matches_template(s.right, tmpl), right) << name << " right";
  };
  check("f1", true, true);
  check("f2", true, false);
  check("f3", true, false);
}

TEST(Sigma, ExtractExpandRoundTrip) {
  auto s = split(fixture_design("f1"));
  auto tmpl = sigma_template(9);
  auto gens = extract_generators(s.left, tmpl);
  ASSERT_TRUE(gens);
  EXPECT_EQ(gens->size(), 36u);
  EXPECT_EQ(expand_template(tmpl, *gens), s.left);
}

TEST(Template, MatchShapeMismatchThrows) {
  EXPECT_THROW(matches_template(PairGrid(3, 3), sigma_template(9)), Error);
}

TEST(Template, MissingGenerator) {
  auto tmpl = sigma_template(3);
  GeneratorAssignment a{{0, UnorderedPair(0, 2)}};
  try {
    expand_template(tmpl, a);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingGenerator);
  }
}

TEST(Template, InvalidSlotsRejected) {
  Grid<Slot> twice(1, 2);
  twice(0, 0) = Slot::free(0);
  twice(0, 1) = Slot::free(0);
  EXPECT_THROW(OrbitTemplate(Permutation::identity(4), twice), Error);
  Grid<Slot> dangling(1, 2);
  dangling(0, 0) = Slot::free(0);
  dangling(0, 1) = Slot::image(5, 1);
  try {
    OrbitTemplate(Permutation::identity(4), dangling);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidTemplate);
  }
}

TEST(Template, ExponentReducedModOrder) {
  Grid<Slot> g(1, 2);
  g(0, 0) = Slot::free(0);
  g(0, 1) = Slot::image(0, 5);
  OrbitTemplate t(Permutation::from_cycles(4, "(0,1,2)"), g);
  EXPECT_EQ(t.slots()(0, 1).exponent, 2);
  auto grid = expand_template(t, {{0, UnorderedPair(0, 3)}});
  EXPECT_EQ(grid(0, 1), Cell(UnorderedPair(2, 3)));
}

TEST(Tau, SlotCounts) {
  auto tp = tau_templates_n7();
  for (const auto* t : {&tp.left, &tp.right}) {
    EXPECT_EQ(t->rows(), 7);
    EXPECT_EQ(t->cols(), 6);
    EXPECT_EQ(t->free_slot_count(), 14u);
    EXPECT_EQ(t->image_slot_count(), 28u);
    EXPECT_EQ(free_in_odd_columns(*t), 7u);
    EXPECT_EQ(t->order(), 3u);
  }
  EXPECT_EQ(tp.left.pi(), Permutation::from_cycles(14, "(0,2,4)(1,3,5)(8,10,12)(9,11,13)"));
}

TEST(Tau, IdentityPermutationCopiesGenerators) {
  auto tp = tau_templates_n7();
  auto plain = tp.left.with_permutation(Permutation::identity(14));
  EXPECT_EQ(plain.order(), 1u);
  GeneratorAssignment a;
  for (int g : plain.generators()) a.emplace(g, UnorderedPair::from_index(g));
  auto grid = expand_template(plain, a);
  for (int r = 0; r < 7; ++r)
    for (int c = 0; c < 6; ++c) EXPECT_EQ(grid(r, c), Cell(a.at(plain.slots()(r, c).generator)));
}

TEST(Tau, ExpandMatchesOrbit) {
  auto tp = tau_templates_n7();
  GeneratorAssignment a;
  for (int g : tp.right.generators()) a.emplace(g, UnorderedPair::from_index(g * 3));
  auto grid = expand_template(tp.right, a);
  EXPECT_TRUE(matches_template(grid, tp.right));
  const auto& tau = tp.right.pi();
  EXPECT_EQ(grid(3, 1), Cell(apply(tau, a.at(6))));
  EXPECT_EQ(grid(3, 2), Cell(apply(tau.pow(2), a.at(6))));
  EXPECT_EQ(grid(3, 5), Cell(apply(tau.pow(2), a.at(7))));
}

TEST(Template, FreeTemplateMatchesAnything) {
  auto s = split(fixture_design("f2"));
  auto t = free_template(11, 10, 22);
  EXPECT_TRUE(matches_template(s.right, t));
  EXPECT_EQ(t.free_slot_count(), 110u);
}
