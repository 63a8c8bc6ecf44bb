#include "zzlocal/metric_graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "zzlocal/errors.hpp"

namespace zzlocal {

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : names_(std::move(vertices)), edges_(std::move(edges)) {
  const std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) throw InputError("duplicate vertex names");
  const std::size_t n = names_.size();
  for (const auto& e : edges_) {
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.length.sign() <= 0) throw InputError("edge lengths must be positive");
  }

  // Floyd-Warshall on the vertex skeleton; graphs here are small.
  std::vector<std::optional<Rational>> d(n * n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Rational(0);
  for (const auto& e : edges_) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      auto& slot = d[a * n + b];
      if (!slot || e.length < *slot) slot = e.length;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k * n + j]) continue;
        Rational via = *d[i * n + k] + *d[k * n + j];
        auto& slot = d[i * n + j];
        if (!slot || via < *slot) slot = std::move(via);
      }
    }
  }
  connected_ = n > 0 && std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
  if (connected_) {
    distances_.reserve(n * n);
    for (auto& x : d) distances_.push_back(std::move(*x));
  }
}

std::size_t MetricGraph::vertex_index(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

const Rational& MetricGraph::vertex_distance(std::size_t a, std::size_t b) const {
  if (!connected_) throw InputError("metric graph is not connected");
  if (a >= names_.size() || b >= names_.size()) throw InputError("vertex index out of range");
  return distances_[a * names_.size() + b];
}

Rational MetricGraph::max_edge_length() const {
  Rational m(0);
  for (const auto& e : edges_) m = std::max(m, e.length);
  return m;
}

GraphPoint GraphPoint::at_vertex(std::size_t vertex) {
  GraphPoint p;
  p.vertex_ = vertex;
  return p;
}

GraphPoint GraphPoint::on_edge(const MetricGraph& graph, std::size_t edge, Rational offset) {
  if (edge >= graph.edges().size()) throw InputError("edge index out of range");
  const Edge& e = graph.edge(edge);
  if (offset.sign() < 0 || e.length < offset) {
    throw InputError("offset " + offset.str() + " outside edge of length " + e.length.str());
  }
  if (offset.is_zero()) return at_vertex(e.u);
  if (offset == e.length) return at_vertex(e.v);
  GraphPoint p;
  p.edge_ = edge;
  p.offset_ = std::move(offset);
  return p;
}

namespace {

struct Exit {
  std::size_t vertex;
  Rational cost;
};

std::vector<Exit> exits(const MetricGraph& graph, const GraphPoint& x) {
  if (x.is_vertex()) {
    if (x.vertex() >= graph.vertex_count()) throw InputError("vertex index out of range");
    return {{x.vertex(), Rational(0)}};
  }
  const Edge& e = graph.edge(x.edge());
  return {{e.u, x.offset()}, {e.v, e.length - x.offset()}};
}

// Breakpoints of t -> min(left + (t - s0), right + (s1 - t)) on [s0, s1].
void append_tent(std::vector<Breakpoint>& out, const Rational& s0, const Rational& s1,
                 const Rational& left, const Rational& right) {
  if (out.empty() || out.back().offset != s0) out.push_back({s0, left});
  const Rational len = s1 - s0;
  if (abs(right - left) < len) {
    const Rational two(2);
    out.push_back({s0 + (len + right - left) / two, (left + right + len) / two});
  }
  out.push_back({s1, right});
}

int slope_sign(const Breakpoint& a, const Breakpoint& b) { return (b.value - a.value).sign(); }

}  // namespace

PLGraphFunction::PLGraphFunction(MetricGraph graph, std::vector<std::vector<Breakpoint>> profiles,
                                 std::vector<Rational> vertex_values)
    : graph_(std::move(graph)), profiles_(std::move(profiles)) {
  if (profiles_.size() != graph_.edges().size()) {
    throw InputError("PL function needs one profile per edge");
  }
  std::vector<std::optional<Rational>> at_vertex(graph_.vertex_count());
  if (!vertex_values.empty()) {
    if (vertex_values.size() != graph_.vertex_count()) {
      throw InputError("PL function needs one value per vertex");
    }
    for (std::size_t v = 0; v < vertex_values.size(); ++v) at_vertex[v] = vertex_values[v];
  }
  const auto record = [&](std::size_t v, const Rational& value) {
    if (at_vertex[v] && *at_vertex[v] != value) {
      throw InputError("PL function disagrees at vertex '" + graph_.vertex_names()[v] + "'");
    }
    at_vertex[v] = value;
  };
  for (std::size_t e = 0; e < profiles_.size(); ++e) {
    const auto& prof = profiles_[e];
    const Edge& edge = graph_.edge(e);
    if (prof.size() < 2 || !prof.front().offset.is_zero() || prof.back().offset != edge.length) {
      throw InputError("PL profile must span the whole edge");
    }
    for (std::size_t k = 1; k < prof.size(); ++k) {
      if (!(prof[k - 1].offset < prof[k].offset)) {
        throw InputError("PL breakpoints must be strictly increasing");
      }
    }
    record(edge.u, prof.front().value);
    record(edge.v, prof.back().value);
  }
  for (std::size_t v = 0; v < at_vertex.size(); ++v) {
    if (!at_vertex[v]) throw InputError("PL function undefined at isolated vertex");
    vertex_values_.push_back(*at_vertex[v]);
  }
}

Rational PLGraphFunction::value_at(std::size_t edge, const Rational& offset) const {
  const auto& prof = profiles_.at(edge);
  if (offset < prof.front().offset || prof.back().offset < offset) {
    throw InputError("offset outside edge");
  }
  const auto hi = std::lower_bound(prof.begin(), prof.end(), offset,
                                   [](const Breakpoint& b, const Rational& t) { return b.offset < t; });
  if (hi->offset == offset) return hi->value;
  const auto lo = std::prev(hi);
  return lo->value + (hi->value - lo->value) * (offset - lo->offset) / (hi->offset - lo->offset);
}

Rational PLGraphFunction::value_at(const GraphPoint& x) const {
  return x.is_vertex() ? vertex_value(x.vertex()) : value_at(x.edge(), x.offset());
}

Rational geodesic_distance(const MetricGraph& graph, const GraphPoint& x, const GraphPoint& y) {
  if (!graph.connected()) throw InputError("metric graph is not connected");
  std::optional<Rational> best;
  if (!x.is_vertex() && !y.is_vertex() && x.edge() == y.edge()) best = abs(x.offset() - y.offset());
  for (const auto& ex : exits(graph, x)) {
    for (const auto& ey : exits(graph, y)) {
      Rational d = ex.cost + graph.vertex_distance(ex.vertex, ey.vertex) + ey.cost;
      if (!best || d < *best) best = std::move(d);
    }
  }
  return *best;
}

PLGraphFunction distance_function(const MetricGraph& graph, const GraphPoint& base) {
  if (!graph.connected()) throw InputError("metric graph is not connected");
  std::vector<Rational> to_vertex;
  to_vertex.reserve(graph.vertex_count());
  for (std::size_t w = 0; w < graph.vertex_count(); ++w) {
    to_vertex.push_back(geodesic_distance(graph, base, GraphPoint::at_vertex(w)));
  }
  std::vector<std::vector<Breakpoint>> profiles;
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const Edge& edge = graph.edge(e);
    std::vector<Breakpoint> prof;
    if (!base.is_vertex() && base.edge() == e) {
      append_tent(prof, Rational(0), base.offset(), to_vertex[edge.u], Rational(0));
      append_tent(prof, base.offset(), edge.length, Rational(0), to_vertex[edge.v]);
    } else {
      append_tent(prof, Rational(0), edge.length, to_vertex[edge.u], to_vertex[edge.v]);
    }
    profiles.push_back(std::move(prof));
  }
  return PLGraphFunction(graph, std::move(profiles), std::move(to_vertex));
}

std::vector<Rational> critical_values(const PLGraphFunction& f) {
  std::set<Rational> values;
  for (std::size_t v = 0; v < f.graph().vertex_count(); ++v) values.insert(f.vertex_value(v));
  for (std::size_t e = 0; e < f.graph().edges().size(); ++e) {
    const auto& prof = f.profile(e);
    for (std::size_t k = 1; k + 1 < prof.size(); ++k) {
      const int before = slope_sign(prof[k - 1], prof[k]);
      const int after = slope_sign(prof[k], prof[k + 1]);
      if (before != after || before == 0) values.insert(prof[k].value);
    }
  }
  return {values.begin(), values.end()};
}

Rational sup_norm_difference(const PLGraphFunction& f, const PLGraphFunction& g) {
  if (!(f.graph() == g.graph())) throw InputError("functions live on different graphs");
  Rational best(0);
  for (std::size_t e = 0; e < f.graph().edges().size(); ++e) {
    std::set<Rational> offsets;
    for (const auto& b : f.profile(e)) offsets.insert(b.offset);
    for (const auto& b : g.profile(e)) offsets.insert(b.offset);
    for (const auto& t : offsets) best = std::max(best, abs(f.value_at(e, t) - g.value_at(e, t)));
  }
  return best;
}

std::vector<GraphPoint> sample_base_points(const MetricGraph& graph, std::size_t per_edge) {
  std::vector<GraphPoint> out;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) out.push_back(GraphPoint::at_vertex(v));
  const Rational steps(static_cast<long>(per_edge + 1));
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    for (std::size_t j = 1; j <= per_edge; ++j) {
      out.push_back(GraphPoint::on_edge(
          graph, e, graph.edge(e).length * Rational(static_cast<long>(j)) / steps));
    }
  }
  return out;
}

Rational sample_spacing(const MetricGraph& graph, std::size_t per_edge) {
  return graph.max_edge_length() / Rational(static_cast<long>(per_edge + 1));
}

}  // namespace zzlocal
