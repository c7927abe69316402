#include "arborsplit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace arborsplit {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw FormatError("line " + std::to_string(line) + ": " + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw FormatError("expected a JSON object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_at(const Json& j, const std::string& where) {
  if (!j.is_string()) throw FormatError("field '" + where + "' must hold strings");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError("field '" + where + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(string_at(e, where));
  return out;
}

VertexId lookup(const PlaneGraph& g, const std::string& name, const std::string& where) {
  const auto v = g.find(name);
  if (!v || !g.contains(*v)) throw FormatError("field '" + where + "' names unknown vertex '" + name + "'");
  return *v;
}

Color color_value(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError("field '" + where + "' must be 1 or 2");
  const auto v = j.get<long long>();
  if (v != 1 && v != 2) throw FormatError("field '" + where + "' must be 1 or 2, got " + std::to_string(v));
  return v == 1 ? Color::one : Color::two;
}

Json names_json(const PlaneGraph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

Json graph_json(const PlaneGraph& g) {
  Json out;
  out["vertices"] = names_json(g, g.vertices());
  Json rot = Json::object();
  for (VertexId v : g.vertices()) rot[g.name(v)] = names_json(g, g.rotation(v));
  out["rotation"] = std::move(rot);
  out["outer_face"] = names_json(g, g.outer_face());
  return out;
}

PlaneGraph graph_from(const Json& doc) {
  const auto names = string_list(field(doc, "vertices"), "vertices");
  const Json& rot = field(doc, "rotation");
  if (!rot.is_object()) throw FormatError("field 'rotation' must be an object");
  for (auto it = rot.begin(); it != rot.end(); ++it) {
    if (std::find(names.begin(), names.end(), it.key()) == names.end()) {
      throw FormatError("field 'rotation." + it.key() + "' names a vertex missing from 'vertices'");
    }
  }
  std::vector<std::vector<std::string>> rotation;
  for (const auto& n : names) {
    const auto it = rot.find(n);
    rotation.push_back(it == rot.end() ? std::vector<std::string>{} : string_list(*it, "rotation." + n));
  }
  const auto outer = string_list(field(doc, "outer_face"), "outer_face");
  try {
    return PlaneGraph::from_names(names, rotation, outer);
  } catch (const MalformedGraph& e) {
    throw FormatError(std::string("malformed graph: ") + e.what());
  }
}

Json coloring_json(const PlaneGraph& g, const Coloring& c, std::span<const VertexId> vs) {
  Json out = Json::object();
  for (VertexId v : vs) {
    if (c[v] != Color::unset) out[g.name(v)] = to_int(c[v]);
  }
  return out;
}

Coloring coloring_from(const Json& assignment, const PlaneGraph& g, const std::string& where) {
  if (!assignment.is_object()) throw FormatError("field '" + where + "' must be an object");
  Coloring c(g.universe_size());
  for (auto it = assignment.begin(); it != assignment.end(); ++it) {
    const std::string at = where + "." + it.key();
    c.set(lookup(g, it.key(), at), color_value(it.value(), at));
  }
  return c;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json trace_json(const PlaneGraph& g, const TraceNode& t) {
  Json out;
  out["kind"] = std::string(to_string(t.kind));
  out["case"] = t.label;
  out["vertices"] = names_json(g, t.vertices);
  out["P"] = names_json(g, t.p);
  Json delta = Json::object();
  for (std::size_t i = 0; i < t.p.size(); ++i) delta[g.name(t.p[i])] = to_int(t.delta[i]);
  out["delta"] = std::move(delta);
  out["Q"] = names_json(g, t.q);
  out["separator"] = names_json(g, t.separator);
  out["separator_is_cycle"] = t.separator_is_cycle;
  out["anchor"] = t.anchor ? Json(g.name(*t.anchor)) : Json(nullptr);
  out["removed"] = names_json(g, t.removed);
  out["guarantee"] = t.guarantee;
  out["coloring"] = coloring_json(g, t.coloring, t.vertices);
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(trace_json(g, c));
  out["children"] = std::move(children);
  return out;
}

std::vector<VertexId> ids(const PlaneGraph& g, const Json& j, const std::string& where) {
  std::vector<VertexId> out;
  for (const auto& n : string_list(j, where)) out.push_back(lookup(g, n, where));
  return out;
}

TraceNode trace_from(const Json& j, const PlaneGraph& g) {
  TraceNode t;
  const auto kind = node_kind_from_string(string_at(field(j, "kind"), "kind"));
  if (!kind) throw FormatError("field 'kind' has an unknown value");
  t.kind = *kind;
  t.label = string_at(field(j, "case"), "case");
  t.vertices = ids(g, field(j, "vertices"), "vertices");
  t.p = ids(g, field(j, "P"), "P");
  const Json& delta = field(j, "delta");
  for (VertexId v : t.p) {
    const auto it = delta.find(g.name(v));
    if (it == delta.end()) throw FormatError("field 'delta' misses P vertex '" + g.name(v) + "'");
    t.delta.push_back(color_value(*it, "delta." + g.name(v)));
  }
  t.q = ids(g, field(j, "Q"), "Q");
  t.separator = ids(g, field(j, "separator"), "separator");
  t.separator_is_cycle = field(j, "separator_is_cycle").get<bool>();
  if (const Json& a = field(j, "anchor"); !a.is_null()) t.anchor = lookup(g, string_at(a, "anchor"), "anchor");
  t.removed = ids(g, field(j, "removed"), "removed");
  t.guarantee = string_at(field(j, "guarantee"), "guarantee");
  t.coloring = coloring_from(field(j, "coloring"), g, "coloring");
  const Json& children = field(j, "children");
  if (!children.is_array()) throw FormatError("field 'children' must be an array");
  for (const auto& c : children) t.children.push_back(trace_from(c, g));
  return t;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("failed writing '" + path + "'");
}

PlaneGraph parse_graph(std::string_view json) { return graph_from(parse_text(json)); }

std::string dump_graph(const PlaneGraph& g) { return dump(graph_json(g)); }

bool is_scene_document(std::string_view json) {
  const Json doc = parse_text(json);
  return doc.is_object() && doc.contains("P");
}

Scene parse_scene(std::string_view json) {
  const Json doc = parse_text(json);
  PlaneGraph g = graph_from(doc);
  const auto p = ids(g, field(doc, "P"), "P");
  const auto q = ids(g, field(doc, "Q"), "Q");
  const Json& delta = field(doc, "delta");
  if (!delta.is_object()) throw FormatError("field 'delta' must be an object");
  std::vector<Color> colors;
  for (VertexId v : p) {
    const auto it = delta.find(g.name(v));
    if (it == delta.end()) {
      throw SceneError(SceneViolation::delta_domain_mismatch, "delta misses P vertex " + g.name(v));
    }
    colors.push_back(color_value(*it, "delta." + g.name(v)));
  }
  for (auto it = delta.begin(); it != delta.end(); ++it) {
    const auto v = g.find(it.key());
    if (!v || std::find(p.begin(), p.end(), *v) == p.end()) {
      throw SceneError(SceneViolation::delta_domain_mismatch, "delta colors non-P vertex " + it.key());
    }
  }
  return make_scene(std::move(g), p, q, std::move(colors));
}

std::string dump_scene(const Scene& s) {
  const auto& g = s.graph();
  Json out = graph_json(g);
  out["P"] = names_json(g, s.precolored());
  out["Q"] = names_json(g, s.forced_two());
  Json delta = Json::object();
  for (std::size_t i = 0; i < s.precolored().size(); ++i) delta[g.name(s.precolored()[i])] = to_int(s.precolors()[i]);
  out["delta"] = std::move(delta);
  return dump(out);
}

Coloring parse_coloring(std::string_view json, const PlaneGraph& g) {
  const Json doc = parse_text(json);
  return coloring_from(field(doc, "assignment"), g, "assignment");
}

std::string dump_coloring(const PlaneGraph& g, const Coloring& c) {
  Json out;
  out["assignment"] = coloring_json(g, c, g.vertices());
  return dump(out);
}

std::string dump_trace(const PlaneGraph& g, const TraceNode& t) { return dump(trace_json(g, t)); }

TraceNode parse_trace(std::string_view json, const PlaneGraph& g) {
  try {
    return trace_from(parse_text(json), g);
  } catch (const Json::type_error& e) {
    throw FormatError(std::string("trace: ") + e.what());
  }
}

std::string dump_report(const PlaneGraph& g, const ValidityReport& r) {
  Json out;
  out["valid"] = r.valid();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json item;
    item["clause"] = std::string(to_string(c.clause));
    item["pass"] = c.pass;
    item["message"] = c.message;
    item["witness"] = names_json(g, c.witness);
    checks.push_back(std::move(item));
  }
  out["checks"] = std::move(checks);
  return dump(out);
}

std::string render_dot(const PlaneGraph& g, const Coloring& c) {
  if (!c.covers(g)) throw std::invalid_argument("render needs a total coloring");
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "graph arborsplit {\n";
  out << "  node [shape=circle];\n";
  for (VertexId v : g.vertices()) {
    out << "  " << quote(g.name(v));
    if (c[v] == Color::one) {
      out << " [class=1, style=filled, fillcolor=\"#e76f51\"]";
    } else {
      out << " [class=2]";
    }
    out << ";\n";
  }
  for (VertexId u : g.vertices()) {
    std::vector<VertexId> nbrs(g.rotation(u).begin(), g.rotation(u).end());
    std::sort(nbrs.begin(), nbrs.end());
    for (VertexId w : nbrs) {
      if (w < u) continue;
      out << "  " << quote(g.name(u)) << " -- " << quote(g.name(w));
      if (c[u] == c[w]) out << " [class=" << to_int(c[u]) << (c[u] == Color::one ? ", penwidth=2" : "") << "]";
      out << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace arborsplit
