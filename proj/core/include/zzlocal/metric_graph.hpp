#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zzlocal/rational.hpp"

namespace zzlocal {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational length;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite undirected multigraph with positive rational edge lengths.
/// Self-loops and parallel edges are allowed.
class MetricGraph {
 public:
  MetricGraph() = default;
  /// Throws InputError on duplicate names, dangling endpoints or lengths <= 0.
  MetricGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::size_t vertex_index(const std::string& name) const;

  bool connected() const { return connected_; }
  /// Shortest-path distance between vertices. Throws InputError if disconnected.
  const Rational& vertex_distance(std::size_t a, std::size_t b) const;
  Rational max_edge_length() const;

  friend bool operator==(const MetricGraph& a, const MetricGraph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  bool connected_ = false;
  std::vector<Rational> distances_;  // row-major, valid iff connected_
};

/// A point of the geometric realization: a vertex, or an interior point of
/// an edge at a given offset from the edge's u endpoint.
class GraphPoint {
 public:
  static GraphPoint at_vertex(std::size_t vertex);
  /// Offsets 0 and length normalize to the endpoints. Throws InputError when
  /// the offset leaves [0, length] or the edge does not exist.
  static GraphPoint on_edge(const MetricGraph& graph, std::size_t edge, Rational offset);

  bool is_vertex() const { return !edge_.has_value(); }
  std::size_t vertex() const { return vertex_; }
  std::size_t edge() const { return *edge_; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const GraphPoint&, const GraphPoint&) = default;

 private:
  std::size_t vertex_ = 0;
  std::optional<std::size_t> edge_;
  Rational offset_;
};

struct Breakpoint {
  Rational offset;
  Rational value;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function on a metric graph: per edge, the
/// breakpoints (including both endpoints) in strictly increasing offset.
class PLGraphFunction {
 public:
  PLGraphFunction() = default;
  /// Throws InputError if a profile does not span [0, length], offsets are
  /// not strictly increasing, or endpoint values disagree at a vertex.
  /// `vertex_values`, when given, must agree with the profiles; it is the
  /// only source of values for vertices without incident edges.
  PLGraphFunction(MetricGraph graph, std::vector<std::vector<Breakpoint>> profiles,
                  std::vector<Rational> vertex_values = {});

  const MetricGraph& graph() const { return graph_; }
  const std::vector<Breakpoint>& profile(std::size_t edge) const { return profiles_.at(edge); }
  const Rational& vertex_value(std::size_t vertex) const { return vertex_values_.at(vertex); }
  Rational value_at(std::size_t edge, const Rational& offset) const;
  Rational value_at(const GraphPoint& x) const;

 private:
  MetricGraph graph_;
  std::vector<std::vector<Breakpoint>> profiles_;
  std::vector<Rational> vertex_values_;
};

/// Length of a shortest path in the realization. Throws InputError if the
/// graph is disconnected.
Rational geodesic_distance(const MetricGraph& graph, const GraphPoint& x, const GraphPoint& y);

/// f(x) = d(v, x) as a PL function; 1-Lipschitz along every edge.
PLGraphFunction distance_function(const MetricGraph& graph, const GraphPoint& base);

/// Vertex values together with values of interior breakpoints that are local
/// extrema or touch a constant piece. Sorted, distinct.
std::vector<Rational> critical_values(const PLGraphFunction& f);

/// max |f - g| over the realization. Throws InputError for different graphs.
Rational sup_norm_difference(const PLGraphFunction& f, const PLGraphFunction& g);

/// All vertices, then k evenly spaced interior points on every edge.
std::vector<GraphPoint> sample_base_points(const MetricGraph& graph, std::size_t per_edge);

/// Spacing bound of sample_base_points: max edge length / (k + 1).
Rational sample_spacing(const MetricGraph& graph, std::size_t per_edge);

}  // namespace zzlocal
