// arborsplit command-line driver.
//
// Exit codes: 0 success, 1 domain failure (invalid or no coloring, certified
// failure), 2 usage or input/output error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arborsplit/decomposer.hpp"
#include "arborsplit/generators.hpp"
#include "arborsplit/io.hpp"
#include "arborsplit/oracle.hpp"
#include "arborsplit/validity.hpp"

namespace {

using namespace arborsplit;

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

Scene load_scene_or_graph(const std::string& path) {
  const std::string text = read_file(path);
  if (is_scene_document(text)) return parse_scene(text);
  return empty_scene(parse_graph(text));
}

void emit(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_file(*path, text);
  } else {
    std::cout << text;
  }
}

struct DecomposeArgs {
  std::string input;
  std::string output;
  std::optional<std::string> trace;
  bool no_defensive = false;
};

int run_decompose(const DecomposeArgs& a) {
  const Scene s = load_scene_or_graph(a.input);
  DecomposeOptions opt = options_from_env();
  opt.defensive_checks = !a.no_defensive;
  try {
    const Decomposition d = color_scene(s, opt);
    write_file(a.output, dump_coloring(s.graph(), d.coloring));
    if (a.trace) write_file(*a.trace, dump_trace(s.graph(), d.trace));
  } catch (const CertifiedFailure& e) {
    std::cerr << "certified failure: " << e.what() << "\n";
    if (a.trace) write_file(*a.trace, dump_trace(s.graph(), e.trace()));
    return kDomain;
  }
  return kOk;
}

struct CheckArgs {
  std::string scene;
  std::string coloring;
};

int run_check(const CheckArgs& a) {
  const Scene s = load_scene_or_graph(a.scene);
  const Coloring c = parse_coloring(read_file(a.coloring), s.graph());
  const ValidityReport r = check_valid(s, c);
  std::cout << dump_report(s.graph(), r);
  return r.valid() ? kOk : kDomain;
}

struct OracleArgs {
  std::string input;
  std::optional<std::string> output;
  bool count = false;
};

int run_oracle(const OracleArgs& a) {
  const Scene s = load_scene_or_graph(a.input);
  if (a.count) {
    emit(a.output, std::to_string(count_valid(s)) + "\n");
    return kOk;
  }
  const auto c = brute_force(s);
  if (!c) {
    std::cerr << "no valid coloring\n";
    return kDomain;
  }
  emit(a.output, dump_coloring(s.graph(), *c));
  return kOk;
}

struct GenArgs {
  std::string family;
  std::vector<std::uint64_t> params;
  std::optional<std::string> out;
};

int run_gen(const GenArgs& a) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (a.params.size() < lo || a.params.size() > hi) {
      throw std::invalid_argument("family '" + a.family + "' takes " + std::to_string(lo) +
                                  (lo == hi ? "" : "-" + std::to_string(hi)) + " parameters");
    }
  };
  PlaneGraph g;
  if (a.family == "grid") {
    need(2, 2);
    g = grid(a.params[0], a.params[1]);
  } else if (a.family == "cycle") {
    need(1, 1);
    g = even_cycle(a.params[0]);
  } else {
    need(1, 2);
    g = grow_quadrangulation(a.params[0], a.params.size() > 1 ? a.params[1] : 1);
  }
  emit(a.out, dump_graph(g));
  return kOk;
}

struct RenderArgs {
  std::string input;
  std::string coloring;
  std::string format = "dot";
  std::optional<std::string> output;
};

int run_render(const RenderArgs& a) {
  const Scene s = load_scene_or_graph(a.input);
  const Coloring c = parse_coloring(read_file(a.coloring), s.graph());
  emit(a.output, render_dot(s.graph(), c));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split triangle-free plane graphs into a forest and a forest of maximum degree three"};
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* cmd_dec = app.add_subcommand("decompose", "Color a graph or scene");
  cmd_dec->add_option("--input", dec.input, "Graph or scene JSON")->required();
  cmd_dec->add_option("--output", dec.output, "Coloring JSON to write")->required();
  cmd_dec->add_option("--trace", dec.trace, "Derivation trace JSON to write");
  cmd_dec->add_flag("--no-defensive-checks", dec.no_defensive, "Skip validation at internal nodes");

  CheckArgs chk;
  auto* cmd_chk = app.add_subcommand("check", "Validate a coloring against a scene");
  cmd_chk->add_option("--scene", chk.scene, "Scene (or graph) JSON")->required();
  cmd_chk->add_option("--coloring", chk.coloring, "Coloring JSON")->required();

  OracleArgs orc;
  auto* cmd_orc = app.add_subcommand("oracle", "Exhaustive search over free vertices");
  cmd_orc->add_option("--input", orc.input, "Scene (or graph) JSON")->required();
  cmd_orc->add_option("--output", orc.output, "Write result here instead of stdout");
  cmd_orc->add_flag("--count", orc.count, "Print the number of valid colorings");

  GenArgs gen;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a graph");
  cmd_gen->add_option("--family", gen.family, "grid | cycle | quad")
      ->required()
      ->check(CLI::IsMember({"grid", "cycle", "quad"}));
  cmd_gen->add_option("--params", gen.params, "grid: ROWS,COLS; cycle: N; quad: STEPS[,SEED]")
      ->required()
      ->delimiter(',');
  cmd_gen->add_option("--out", gen.out, "Graph JSON to write (stdout if omitted)");

  RenderArgs ren;
  auto* cmd_ren = app.add_subcommand("render", "Draw a colored graph");
  cmd_ren->add_option("--input", ren.input, "Graph or scene JSON")->required();
  cmd_ren->add_option("--coloring", ren.coloring, "Coloring JSON")->required();
  cmd_ren->add_option("--format", ren.format, "Output format")->check(CLI::IsMember({"dot"}));
  cmd_ren->add_option("--output", ren.output, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (cmd_dec->parsed()) return run_decompose(dec);
    if (cmd_chk->parsed()) return run_check(chk);
    if (cmd_orc->parsed()) return run_oracle(orc);
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_ren->parsed()) return run_render(ren);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
