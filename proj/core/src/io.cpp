#include "zzlocal/io.hpp"

#include <algorithm>
#include <fstream>

#include "zzlocal/errors.hpp"

namespace zzlocal::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  return a;
}

std::size_t index_from_json(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::string_view split_once(std::string_view text, char sep, std::string_view& rest) {
  const auto pos = text.find(sep);
  if (pos == std::string_view::npos) {
    throw InputError("expected '" + std::string(1, sep) + "' in '" + std::string(text) + "'");
  }
  rest = text.substr(pos + 1);
  return text.substr(0, pos);
}

Simplex simplex_from_json(const json& j) {
  if (!j.is_array()) throw InputError("simplex must be an array of vertex ids");
  Simplex s;
  for (const auto& v : j) s.push_back(index_from_json(v, "vertex id"));
  return s;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path.string() + "': " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("expected a rational as string or integer, got " + j.dump());
}

ExtReal ext_real_from_json(const json& j) {
  if (j.is_string()) return ExtReal::parse(j.get<std::string>());
  return ExtReal(rational_from_json(j));
}

json to_json(const PersistenceDiagram& diagram) {
  json points = json::array();
  for (const auto& p : diagram.points()) {
    points.push_back({{"birth", p.birth.str()}, {"death", p.death.str()}, {"dim", p.dim}});
  }
  return {{"points", points}};
}

PersistenceDiagram diagram_from_json(const json& j) {
  std::vector<DiagramPoint> points;
  for (const auto& p : array_field(j, "points")) {
    const int dim = p.contains("dim") ? static_cast<int>(index_from_json(p.at("dim"), "dim")) : 0;
    points.emplace_back(rational_from_json(field(p, "birth")), ext_real_from_json(field(p, "death")),
                        dim);
  }
  return PersistenceDiagram(std::move(points));
}

json to_json(const ZigzagModule& module) {
  json arrows = json::array();
  for (const auto& a : module.arrows()) {
    arrows.push_back({{"dir", a.direction == ArrowDirection::Forward ? "fwd" : "bwd"},
                      {"matrix", a.matrix.to_rows()}});
  }
  return {{"dims", module.dims()}, {"arrows", arrows}};
}

ZigzagModule zigzag_from_json(const json& j) {
  std::vector<std::size_t> dims;
  for (const auto& d : array_field(j, "dims")) dims.push_back(index_from_json(d, "dimension"));
  const json& arrows_json = array_field(j, "arrows");
  if (dims.empty() || arrows_json.size() + 1 != dims.size()) {
    throw InputError("zigzag module needs exactly one arrow between consecutive positions");
  }
  std::vector<Arrow> arrows;
  for (std::size_t s = 0; s < arrows_json.size(); ++s) {
    const json& a = arrows_json[s];
    const std::string dir = field(a, "dir").is_string() ? a.at("dir").get<std::string>() : "";
    if (dir != "fwd" && dir != "bwd") throw InputError("arrow dir must be \"fwd\" or \"bwd\"");
    const bool fwd = dir == "fwd";
    const std::size_t cols = fwd ? dims[s] : dims[s + 1];
    std::vector<std::vector<int>> rows;
    for (const auto& row : array_field(a, "matrix")) {
      if (!row.is_array()) throw InputError("matrix rows must be arrays");
      std::vector<int> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) throw InputError("matrix entries must be 0 or 1");
        r.push_back(x.get<int>());
      }
      rows.push_back(std::move(r));
    }
    arrows.push_back({fwd ? ArrowDirection::Forward : ArrowDirection::Backward,
                      GF2Matrix::from_rows(rows, cols)});
  }
  return ZigzagModule(std::move(dims), std::move(arrows));
}

json to_json(const std::vector<IndexInterval>& intervals) {
  json out = json::array();
  for (const auto& iv : intervals) out.push_back({{"birth", iv.birth}, {"death", iv.death}});
  return {{"intervals", out}};
}

json to_json(const MetricGraph& graph) {
  json edges = json::array();
  for (const auto& e : graph.edges()) {
    edges.push_back({{"u", graph.vertex_names()[e.u]},
                     {"v", graph.vertex_names()[e.v]},
                     {"length", e.length.str()}});
  }
  return {{"vertices", graph.vertex_names()}, {"edges", edges}};
}

MetricGraph graph_from_json(const json& j) {
  std::vector<std::string> names;
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  const auto lookup = [&](const json& v) {
    if (!v.is_string()) throw InputError("edge endpoints must be vertex names");
    const auto it = std::find(names.begin(), names.end(), v.get<std::string>());
    if (it == names.end()) throw InputError("unknown vertex '" + v.get<std::string>() + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<Edge> edges;
  for (const auto& e : array_field(j, "edges")) {
    edges.push_back({lookup(field(e, "u")), lookup(field(e, "v")), rational_from_json(field(e, "length"))});
  }
  return MetricGraph(std::move(names), std::move(edges));
}

Bifiltration bifiltration_from_json(const json& j) {
  std::vector<BifilteredSimplex> simplices;
  for (const auto& s : array_field(j, "simplices")) {
    const json& g = field(s, "grade");
    if (!g.is_array() || g.size() != 2) throw InputError("grade must be a pair");
    simplices.push_back({simplex_from_json(field(s, "verts")),
                         {rational_from_json(g[0]), rational_from_json(g[1])}});
  }
  return Bifiltration(std::move(simplices));
}

std::vector<SimplicialComplex> snapshots_from_json(const json& j) {
  std::vector<SimplicialComplex> out;
  for (const auto& snap : array_field(j, "snapshots")) {
    if (!snap.is_array()) throw InputError("snapshot must be an array of simplices");
    std::vector<Simplex> simplices;
    for (const auto& s : snap) simplices.push_back(simplex_from_json(s));
    out.emplace_back(std::move(simplices));
  }
  return out;
}

GraphPoint parse_graph_point(const MetricGraph& graph, std::string_view text) {
  std::string_view rest;
  const std::string_view kind = split_once(text, ':', rest);
  if (kind == "vertex") return GraphPoint::at_vertex(graph.vertex_index(std::string(rest)));
  if (kind == "edge") {
    std::string_view offset;
    const std::string_view edge = split_once(rest, '@', offset);
    const Rational e = Rational::parse(edge);
    if (e.sign() < 0 || e.raw().get_den() != 1) throw InputError("edge index must be an integer");
    return GraphPoint::on_edge(graph, e.raw().get_num().get_ui(), Rational::parse(offset));
  }
  throw InputError("graph point must look like vertex:<name> or edge:<i>@<offset>");
}

std::string format_graph_point(const MetricGraph& graph, const GraphPoint& point) {
  if (point.is_vertex()) return "vertex:" + graph.vertex_names().at(point.vertex());
  return "edge:" + std::to_string(point.edge()) + "@" + point.offset().str();
}

RestrictionInterval parse_interval(std::string_view text) {
  std::string_view hi;
  const std::string_view lo = split_once(text, ':', hi);
  return RestrictionInterval(Rational::parse(lo), Rational::parse(hi));
}

Box parse_box(std::string_view text) {
  std::string_view y;
  const std::string_view x = split_once(text, ',', y);
  return Box{parse_interval(x), parse_interval(y)};
}

}  // namespace zzlocal::io
