#include <gtest/gtest.h>

#include "arborsplit/decomposer.hpp"
#include "arborsplit/generators.hpp"
#include "arborsplit/io.hpp"
#include "arborsplit/validity.hpp"
#include "test_support.hpp"

namespace arborsplit {
namespace {

using namespace arborsplit::testing;

const char* kC4 = R"({
  "vertices": [
    "v0",
    "v1",
    "v2",
    "v3"
  ],
  "rotation": {
    "v0": [
      "v1",
      "v3"
    ],
    "v1": [
      "v2",
      "v0"
    ],
    "v2": [
      "v3",
      "v1"
    ],
    "v3": [
      "v0",
      "v2"
    ]
  },
  "outer_face": [
    "v0",
    "v1",
    "v2",
    "v3"
  ]
}
)";

TEST(Io, GraphRoundTripIsByteIdentical) {
  const auto g = parse_graph(kC4);
  EXPECT_EQ(g, c4());
  EXPECT_EQ(dump_graph(g), kC4);
}

TEST(Io, GeneratedGraphsRoundTrip) {
  for (const auto& g : {grid(3, 4), nested_cube_with_center(), grow_quadrangulation(30, 9)}) {
    const auto text = dump_graph(g);
    EXPECT_EQ(dump_graph(parse_graph(text)), text);
  }
}

TEST(Io, SceneRoundTrip) {
  const auto s = scene(c4(), {"v0", "v1"}, {"v3"}, {1, 2});
  const auto text = dump_scene(s);
  EXPECT_TRUE(is_scene_document(text));
  EXPECT_FALSE(is_scene_document(kC4));
  const auto back = parse_scene(text);
  EXPECT_EQ(dump_scene(back), text);
  EXPECT_EQ(back.precolors().size(), 2U);
}

TEST(Io, SceneDeltaMissingPVertex) {
  auto text = dump_scene(scene(c4(), {"v0"}, {}, {1}));
  const auto at = text.find("\"v0\": 1");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 7, "\"v2\": 1");
  try {
    parse_scene(text);
    FAIL() << "accepted";
  } catch (const SceneError& e) {
    EXPECT_EQ(e.kind(), SceneViolation::delta_domain_mismatch);
  }
}

TEST(Io, ColoringValueThreeRejected) {
  const auto g = c4();
  try {
    parse_coloring(R"({"assignment": {"v0": 3}})", g);
    FAIL() << "accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("assignment.v0"), std::string::npos);
  }
}

TEST(Io, ColoringRoundTrip) {
  const auto g = c4();
  const auto c = coloring_from_values(g, {1, 2, 2, 1});
  EXPECT_EQ(parse_coloring(dump_coloring(g, c), g), c);
}

TEST(Io, SyntaxErrorNamesLine) {
  try {
    parse_graph("{\n  \"vertices\": [\n  ,\n}");
    FAIL() << "accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(Io, SchemaErrorsNameField) {
  try {
    parse_graph(R"({"vertices": ["a"], "rotation": {"a": ["b"]}, "outer_face": ["a"]})");
    FAIL() << "accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("malformed"), std::string::npos) << e.what();
  }
  try {
    parse_graph(R"({"vertices": ["a"], "rotation": {}})");
    FAIL() << "accepted";
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("outer_face"), std::string::npos) << e.what();
  }
}

TEST(Io, TraceRoundTrip) {
  const auto g = grow_quadrangulation(40, 2);
  const auto d = decompose(g, {4, true, kDefaultOracleCap});
  const auto text = dump_trace(g, d.trace);
  EXPECT_EQ(dump_trace(g, parse_trace(text, g)), text);
}

TEST(Io, ReportListsClauses) {
  const auto g = c4();
  const auto text = dump_report(g, check_valid(empty_scene(g), coloring_from_values(g, {2, 2, 2, 2})));
  EXPECT_NE(text.find("\"valid\": false"), std::string::npos);
  EXPECT_NE(text.find("\"clause\": \"G1\""), std::string::npos);
}

TEST(Io, MissingFileIsIoError) { EXPECT_THROW(read_file("/nonexistent/arborsplit.json"), IoError); }

TEST(Render, C4HighlightsOneNode) {
  const auto g = c4();
  const auto dot = render_dot(g, coloring_from_values(g, {1, 2, 2, 2}));
  std::size_t filled = 0;
  for (std::size_t at = dot.find("fillcolor"); at != std::string::npos; at = dot.find("fillcolor", at + 1)) ++filled;
  EXPECT_EQ(filled, 1U);
  EXPECT_TRUE(dot_parses(dot));
}

TEST(Render, EmptyGraph) {
  const auto dot = render_dot(PlaneGraph(), Coloring());
  EXPECT_TRUE(dot_parses(dot));
  EXPECT_EQ(dot.find("--"), std::string::npos);
}

TEST(Render, GridParsesAndIsDeterministic) {
  const auto g = grid(3, 3);
  const auto d = decompose(g);
  const auto dot = render_dot(g, d.coloring);
  std::string err;
  EXPECT_TRUE(dot_parses(dot, &err)) << err;
  EXPECT_EQ(dot, render_dot(g, d.coloring));
}

TEST(Render, PartialColoringRejected) {
  const auto g = c4();
  EXPECT_THROW(render_dot(g, coloring(g, {{"v0", 1}})), std::invalid_argument);
}

}  // namespace
}  // namespace arborsplit
