#include <gtest/gtest.h>

#include <algorithm>

#include "arborsplit/generators.hpp"
#include "arborsplit/structure.hpp"
#include "test_support.hpp"

namespace arborsplit {
namespace {

using namespace arborsplit::testing;

std::vector<VertexId> sorted(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Components, DisjointUnionOfC4AndK1) {
  const auto g = PlaneGraph::from_names({"v0", "v1", "v2", "v3", "k"},
                                        {{"v1", "v3"}, {"v2", "v0"}, {"v3", "v1"}, {"v0", "v2"}, {}},
                                        {"v0", "v1", "v2", "v3", "k"});
  const auto cs = components(g);
  ASSERT_EQ(cs.size(), 2U);
  EXPECT_EQ(cs[0].size(), 4U);
  EXPECT_EQ(cs[1], ids(g, {"k"}));
}

TEST(Components, ConnectedAndEmpty) {
  EXPECT_EQ(components(grid(3, 3)).size(), 1U);
  EXPECT_TRUE(components(PlaneGraph()).empty());
}

TEST(ArticulationPoints, Examples) {
  const auto g = two_squares_at_vertex();
  EXPECT_EQ(articulation_points(g), ids(g, {"w"}));
  const auto p = path(4);
  EXPECT_EQ(articulation_points(p), ids(p, {"v1", "v2"}));
  EXPECT_TRUE(articulation_points(c4()).empty());
}

TEST(FindCut, CutVertex) {
  const auto g = two_squares_at_vertex();
  const auto cut = find_cut(g, {});
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->h, ids(g, {"w"}));
  EXPECT_FALSE(cut->h_is_cycle);
  EXPECT_EQ(cut->g1.size() + cut->g2.size(), 8U);
  EXPECT_FALSE(split_violation(g, {}, *cut).has_value());
}

TEST(FindCut, ChordOfHexagon) {
  const auto g = c6_with_chord();
  const auto cut = find_cut(g, {});
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(sorted(cut->h), ids(g, {"v0", "v3"}));
  EXPECT_EQ(cut->g1.size(), 4U);
  EXPECT_EQ(cut->g2.size(), 4U);
  EXPECT_FALSE(split_violation(g, {}, *cut).has_value());
}

TEST(FindCut, KeepsPInFirstSide) {
  const auto g = c6_with_chord();
  const auto p = ids(g, {"v4", "v5"});
  const auto cut = find_cut(g, p);
  ASSERT_TRUE(cut.has_value());
  for (VertexId v : p) EXPECT_TRUE(std::binary_search(cut->g1.begin(), cut->g1.end(), v));
}

TEST(FindCut, NoneOnC4) { EXPECT_FALSE(find_cut(c4(), {}).has_value()); }

TEST(SeparatingFourCycle, CubeHasNone) { EXPECT_FALSE(find_separating_4cycle(nested_cube()).has_value()); }

TEST(SeparatingFourCycle, CentredCube) {
  const auto g = nested_cube_with_center();
  const auto c = find_separating_4cycle(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(sorted(c->cycle), sorted(ids(g, {"i0", "i1", "i2", "i3"})));
  EXPECT_EQ(c->cycle.front(), *std::min_element(c->cycle.begin(), c->cycle.end()));
  EXPECT_EQ(c->interior, ids(g, {"p"}));
}

TEST(SeparatingFourCycle, C4HasNone) { EXPECT_FALSE(find_separating_4cycle(c4()).has_value()); }

TEST(ExtensionConfig, GridWithNorthMidpoint) {
  const auto g = grid(3, 3);
  const auto cfg = find_extension_config(g, ids(g, {"r0c1"}));
  ASSERT_TRUE(cfg.has_value());
  EXPECT_EQ(cfg->x, g.id("r1c1"));
  EXPECT_EQ(cfg->s, g.id("r0c1"));
  EXPECT_EQ(cfg->t, g.id("r2c1"));
}

TEST(ExtensionConfig, AbsentCases) {
  const auto g = grid(3, 3);
  EXPECT_FALSE(find_extension_config(g, {}).has_value());
  EXPECT_FALSE(find_extension_config(c4(), ids(c4(), {"v0"})).has_value());
  // A corner is not adjacent to the centre.
  EXPECT_FALSE(find_extension_config(g, ids(g, {"r0c0"})).has_value());
}

TEST(ExtensionConfig, SplitThroughCentre) {
  const auto g = grid(3, 3);
  const auto cfg = *find_extension_config(g, ids(g, {"r0c1"}));
  const auto split = split_through(g, {}, cfg);
  EXPECT_EQ(split.g1.size(), 6U);
  EXPECT_EQ(split.g2.size(), 6U);
  EXPECT_EQ(sorted(split.h), sorted(ids(g, {"r0c1", "r1c1", "r2c1"})));
  EXPECT_FALSE(split_violation(g, {}, split).has_value());

  const auto p = ids(g, {"r2c2"});
  const auto with_p = split_through(g, p, cfg);
  EXPECT_TRUE(std::binary_search(with_p.g1.begin(), with_p.g1.end(), p[0]));
}

TEST(MainQuad, CaseA) {
  const auto g = even_cycle(8);
  const auto mq = choose_main_quad(scene(g, {}, {"v0", "v2"}, {}));
  EXPECT_EQ(mq.label, MainCase::a);
  EXPECT_EQ(mq.x, g.id("v1"));
}

TEST(MainQuad, CaseB) {
  const auto g = even_cycle(8);
  const auto mq = choose_main_quad(scene(g, {}, {"v0", "v3"}, {}));
  EXPECT_EQ(mq.label, MainCase::b);
  EXPECT_EQ(mq.s, g.id("v0"));
  EXPECT_EQ(mq.x, g.id("v1"));
  EXPECT_EQ(mq.z, g.id("v2"));
  EXPECT_EQ(mq.t, g.id("v3"));
}

TEST(MainQuad, CaseD) {
  const auto g = even_cycle(8);
  const auto mq = choose_main_quad(empty_scene(g));
  EXPECT_EQ(mq.label, MainCase::d);
  for (VertexId v : {mq.r, mq.s, mq.x, mq.z, mq.t}) EXPECT_TRUE(g.contains(v));
  EXPECT_TRUE(g.adjacent(mq.s, mq.x));
  EXPECT_TRUE(g.adjacent(mq.x, mq.z));
  EXPECT_TRUE(g.adjacent(mq.r, mq.s));
  EXPECT_TRUE(g.adjacent(mq.z, mq.t));
}

TEST(MainQuad, CaseC) {
  const auto g = even_cycle(8);
  // v1 sits next to v0 in Q, but v2 and v3 are free: no A, no B.
  const auto mq = choose_main_quad(scene(g, {}, {"v0", "v4"}, {}));
  EXPECT_EQ(mq.label, MainCase::c);
}

// Both P vertices precolored 1 exclude their neighbours as x; the last
// candidate sits in Q.
TEST(MainQuad, NoCaseOnPinchedC5) {
  EXPECT_THROW(choose_main_quad(scene(c5(), {"v0", "v1"}, {"v3"}, {1, 1})), NoCaseApplies);
  EXPECT_NO_THROW(choose_main_quad(scene(c5(), {"v0", "v1"}, {"v3"}, {1, 2})));
  EXPECT_THROW(choose_main_quad(scene(c4(), {"v0", "v1"}, {}, {1, 1})), NoCaseApplies);
}

TEST(MainQuad, NeedsInducedCycle) { EXPECT_THROW(choose_main_quad(empty_scene(path(5))), std::invalid_argument); }

TEST(MainQuad, Names) {
  EXPECT_EQ(to_string(MainCase::a), "A");
  EXPECT_EQ(to_string(MainCase::d), "D");
}

}  // namespace
}  // namespace arborsplit
