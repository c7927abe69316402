#include <gtest/gtest.h>

#include "arborsplit/generators.hpp"
#include "arborsplit/scene.hpp"
#include "test_support.hpp"

namespace arborsplit {
namespace {

using namespace arborsplit::testing;

SceneViolation violation_of(auto&& build) {
  try {
    build();
  } catch (const SceneError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no SceneError";
  return SceneViolation::unknown_vertex;
}

TEST(Scene, EmptySceneOnC4) {
  const auto s = scene(c4(), {}, {}, {});
  EXPECT_TRUE(s.precolored().empty());
  EXPECT_TRUE(s.forced_two().empty());
}

TEST(Scene, ConsecutivePrecoloredPair) {
  const auto g = c4();
  const auto s = scene(g, {"v0", "v1"}, {}, {1, 2});
  EXPECT_EQ(s.precolor(g.id("v0")), Color::one);
  EXPECT_EQ(s.precolor(g.id("v1")), Color::two);
  EXPECT_EQ(s.precolored_ones().first, 1U);
  EXPECT_EQ(s.precolored_ones().second, g.id("v0"));
}

TEST(Scene, QMustBeIndependent) {
  const auto g = c4();
  EXPECT_EQ(violation_of([&] { scene(g, {}, {"v0", "v1"}, {}); }), SceneViolation::q_not_independent);
}

TEST(Scene, OtherViolations) {
  const auto g = c4();
  EXPECT_EQ(violation_of([&] { scene(g, {"v0", "v2"}, {}, {1, 1}); }), SceneViolation::p_not_consecutive);
  EXPECT_EQ(violation_of([&] { scene(g, {"v0"}, {"v0"}, {1}); }), SceneViolation::q_meets_p);
  EXPECT_EQ(violation_of([&] { scene(g, {"v0"}, {}, {}); }), SceneViolation::delta_domain_mismatch);
  const auto grid33 = grid(3, 3);
  EXPECT_EQ(violation_of([&] { scene(grid33, {}, {"r1c1"}, {}); }), SceneViolation::q_off_boundary);
  EXPECT_EQ(violation_of([&] { make_scene(g, {kNoVertex - 1}, {}, {Color::one}); }),
            SceneViolation::unknown_vertex);
  const auto tri = PlaneGraph::from_names({"a", "b", "c"}, {{"b", "c"}, {"c", "a"}, {"a", "b"}}, {"a", "b", "c"});
  EXPECT_EQ(violation_of([&] { empty_scene(tri); }), SceneViolation::triangle_found);
}

TEST(Scene, ForcedAssignments) {
  const auto g = c4();
  EXPECT_EQ(forced_assignments(scene(g, {"v0"}, {"v2"}, {1})), coloring(g, {{"v0", 1}, {"v2", 2}}));
  EXPECT_EQ(forced_assignments(scene(g, {}, {}, {})), Coloring(g.universe_size()));
  EXPECT_EQ(forced_assignments(scene(g, {"v0", "v1"}, {"v3"}, {2, 2})),
            coloring(g, {{"v0", 2}, {"v1", 2}, {"v3", 2}}));
}

TEST(Scene, ConsecutiveEitherDirection) {
  const auto g = c4();
  EXPECT_TRUE(consecutive_on_boundary(g, ids(g, {"v1", "v0"})));
  EXPECT_TRUE(consecutive_on_boundary(g, ids(g, {"v3", "v0"})));
  EXPECT_FALSE(consecutive_on_boundary(g, ids(g, {"v1", "v3"})));
}

TEST(Coloring, MergeReportsConflict) {
  const auto g = c4();
  auto a = coloring(g, {{"v0", 1}});
  EXPECT_FALSE(a.merge(coloring(g, {{"v1", 2}})).has_value());
  EXPECT_EQ(a.merge(coloring(g, {{"v0", 2}, {"v2", 2}})), g.id("v0"));
  EXPECT_EQ(a[g.id("v2")], Color::unset);
  EXPECT_FALSE(a.covers(g));
}

}  // namespace
}  // namespace arborsplit
