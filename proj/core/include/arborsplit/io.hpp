#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "arborsplit/scene.hpp"
#include "arborsplit/trace.hpp"
#include "arborsplit/validity.hpp"

namespace arborsplit {

/// Input that is not valid JSON or does not follow the expected schema.
/// The message names the line (for syntax errors) or the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

// All writers emit two-space indented JSON with a trailing newline; key and
// list order follow vertex id order, so output is deterministic.

PlaneGraph parse_graph(std::string_view json);
std::string dump_graph(const PlaneGraph& g);

/// True when the document has a "P" key, i.e. describes a scene.
bool is_scene_document(std::string_view json);

Scene parse_scene(std::string_view json);
std::string dump_scene(const Scene& s);

/// Coloring over g's vertices; names not in g are rejected.
Coloring parse_coloring(std::string_view json, const PlaneGraph& g);
std::string dump_coloring(const PlaneGraph& g, const Coloring& c);

std::string dump_trace(const PlaneGraph& g, const TraceNode& t);
TraceNode parse_trace(std::string_view json, const PlaneGraph& g);

std::string dump_report(const PlaneGraph& g, const ValidityReport& r);

/// Undirected DOT drawing; class-1 vertices are filled. Requires a total
/// coloring.
std::string render_dot(const PlaneGraph& g, const Coloring& c);

}  // namespace arborsplit
