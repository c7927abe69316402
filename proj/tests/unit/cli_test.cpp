#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "arborsplit/generators.hpp"
#include "arborsplit/io.hpp"
#include "arborsplit/validity.hpp"
#include "test_support.hpp"

namespace arborsplit {
namespace {

namespace fs = std::filesystem;
using namespace arborsplit::testing;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("arborsplit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args, const std::string& env = "") const {
    const std::string cmd = env + " " + ARBORSPLIT_EXE + " " + args + " > " + path("stdout") + " 2> " + path("stderr");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const { return read_file(path("stdout")); }

  fs::path dir_;
};

TEST_F(Cli, GenDecomposeCheckRender) {
  ASSERT_EQ(run("gen --family grid --params 3,4 --out " + path("g.json")), 0);
  ASSERT_EQ(run("decompose --input " + path("g.json") + " --output " + path("c.json") + " --trace " + path("t.json")), 0);
  const auto g = parse_graph(read_file(path("g.json")));
  EXPECT_EQ(g.vertex_count(), 12U);
  const auto c = parse_coloring(read_file(path("c.json")), g);
  EXPECT_TRUE(check_valid(empty_scene(g), c).valid());
  EXPECT_TRUE(fs::exists(path("t.json")));

  EXPECT_EQ(run("check --scene " + path("g.json") + " --coloring " + path("c.json")), 0);
  EXPECT_NE(out().find("\"valid\": true"), std::string::npos);

  EXPECT_EQ(run("render --input " + path("g.json") + " --coloring " + path("c.json")), 0);
  EXPECT_TRUE(dot_parses(out()));
}

TEST_F(Cli, GenFamilies) {
  EXPECT_EQ(run("gen --family cycle --params 6"), 0);
  EXPECT_EQ(parse_graph(out()).vertex_count(), 6U);
  EXPECT_EQ(run("gen --family quad --params 10,3"), 0);
  EXPECT_EQ(parse_graph(out()), grow_quadrangulation(10, 3));
  EXPECT_EQ(run("gen --family quad --params 10"), 0);
  EXPECT_EQ(parse_graph(out()), grow_quadrangulation(10, 1));
}

TEST_F(Cli, CheckInvalidColoringIsDomainFailure) {
  const auto g = c4();
  write_file(path("g.json"), dump_graph(g));
  write_file(path("c.json"), dump_coloring(g, coloring_from_values(g, {2, 2, 2, 2})));
  EXPECT_EQ(run("check --scene " + path("g.json") + " --coloring " + path("c.json")), 1);
  EXPECT_NE(out().find("\"valid\": false"), std::string::npos);
}

TEST_F(Cli, OracleNoneAndCount) {
  const auto g = c4();
  write_file(path("g.json"), dump_graph(g));
  EXPECT_EQ(run("oracle --input " + path("g.json") + " --count"), 0);
  EXPECT_EQ(out(), "14\n");
  EXPECT_EQ(run("oracle --input " + path("g.json")), 0);
  EXPECT_TRUE(check_valid(empty_scene(g), parse_coloring(out(), g)).valid());

  const auto s = make_scene(g, ids(g, {"v0", "v1", "v2", "v3"}), {}, {Color::two, Color::two, Color::two, Color::two});
  write_file(path("s.json"), dump_scene(s));
  EXPECT_EQ(run("oracle --input " + path("s.json")), 1);
}

TEST_F(Cli, DecomposeScene) {
  const auto g = grid(3, 3);
  write_file(path("s.json"), dump_scene(scene(g, {"r0c0", "r0c1"}, {"r2c2"}, {1, 2})));
  ASSERT_EQ(run("decompose --input " + path("s.json") + " --output " + path("c.json")), 0);
  EXPECT_EQ(run("check --scene " + path("s.json") + " --coloring " + path("c.json")), 0);
}

TEST_F(Cli, DecomposeTooManyPrecoloredIsUsageError) {
  const auto g = c4();
  write_file(path("s.json"),
             dump_scene(make_scene(g, ids(g, {"v0", "v1", "v2"}), {}, {Color::two, Color::two, Color::two})));
  EXPECT_EQ(run("decompose --input " + path("s.json") + " --output " + path("c.json")), 2);
}

TEST_F(Cli, BaseThresholdFromEnvironment) {
  write_file(path("g.json"), dump_graph(grid(3, 3)));
  ASSERT_EQ(run("decompose --input " + path("g.json") + " --output " + path("c.json") + " --trace " + path("t.json"),
                "ARBORSPLIT_BASE_N=4"),
            0);
  const auto g = grid(3, 3);
  EXPECT_NE(parse_trace(read_file(path("t.json")), g).kind, NodeKind::base);
  ASSERT_EQ(run("decompose --input " + path("g.json") + " --output " + path("c.json") + " --trace " + path("t.json"),
                "ARBORSPLIT_BASE_N=9"),
            0);
  EXPECT_EQ(parse_trace(read_file(path("t.json")), g).kind, NodeKind::base);
  EXPECT_EQ(run("decompose --input " + path("g.json") + " --output " + path("c.json"), "ARBORSPLIT_BASE_N=x"), 2);
}

TEST_F(Cli, UsageAndIoErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("decompose --input"), 2);
  EXPECT_EQ(run("gen --family hexagon --params 1"), 2);
  EXPECT_EQ(run("gen --family grid --params 3"), 2);
  EXPECT_EQ(run("decompose --input " + path("missing.json") + " --output " + path("c.json")), 2);
  write_file(path("bad.json"), "{ not json");
  EXPECT_EQ(run("decompose --input " + path("bad.json") + " --output " + path("c.json")), 2);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, TriangleInputIsUsageError) {
  write_file(path("t.json"), R"({"vertices": ["a", "b", "c"],
    "rotation": {"a": ["b", "c"], "b": ["c", "a"], "c": ["a", "b"]},
    "outer_face": ["a", "b", "c"]})");
  EXPECT_EQ(run("decompose --input " + path("t.json") + " --output " + path("c.json")), 2);
}

}  // namespace
}  // namespace arborsplit
