#include "zzlocal/levelset.hpp"

#include <map>
#include <stdexcept>

#include "union_find.hpp"
#include "zzlocal/errors.hpp"

namespace zzlocal {

CriticalSequence CriticalSequence::from_criticals(std::vector<Rational> criticals) {
  if (criticals.empty()) throw InputError("level-set zigzag needs at least one critical value");
  for (std::size_t k = 1; k < criticals.size(); ++k) {
    if (!(criticals[k - 1] < criticals[k])) {
      throw InputError("critical values must be strictly increasing");
    }
  }
  CriticalSequence seq;
  seq.regulars.push_back(criticals.front() - Rational(1));
  for (std::size_t k = 1; k < criticals.size(); ++k) {
    seq.regulars.push_back((criticals[k - 1] + criticals[k]) / Rational(2));
  }
  seq.regulars.push_back(criticals.back() + Rational(1));
  seq.criticals = std::move(criticals);
  return seq;
}

std::size_t SliceComplex::component_of(const MetricGraph& graph, std::size_t edge,
                                       const Rational& offset) const {
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    const auto& piece = pieces[k];
    if (piece.edge == edge && piece.from <= offset && offset <= piece.to) {
      return component[vertices.size() + k];
    }
  }
  const Edge& e = graph.edge(edge);
  const auto at_end = [&](std::size_t v) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      if (vertices[k] == v) return component[k];
    }
    return std::nullopt;
  };
  if (offset.is_zero()) {
    if (auto c = at_end(e.u)) return *c;
  }
  if (offset == e.length) {
    if (auto c = at_end(e.v)) return *c;
  }
  throw std::out_of_range("point not in slice");
}

namespace {

// Sub-range of a linear segment where lo <= value <= hi.
std::optional<std::pair<Rational, Rational>> clip_segment(const Breakpoint& p, const Breakpoint& q,
                                                          const Rational& lo, const Rational& hi) {
  if (p.value == q.value) {
    if (lo <= p.value && p.value <= hi) return std::pair{p.offset, q.offset};
    return std::nullopt;
  }
  const auto offset_at = [&](const Rational& y) {
    return p.offset + (y - p.value) * (q.offset - p.offset) / (q.value - p.value);
  };
  Rational a = offset_at(lo);
  Rational b = offset_at(hi);
  if (b < a) std::swap(a, b);
  a = std::max(a, p.offset);
  b = std::min(b, q.offset);
  if (b < a) return std::nullopt;
  return std::pair{std::move(a), std::move(b)};
}

}  // namespace

SliceComplex build_slice(const PLGraphFunction& f, const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("slice with lo > hi");
  const MetricGraph& graph = f.graph();
  SliceComplex slice;
  slice.lo = lo;
  slice.hi = hi;
  std::map<std::size_t, std::size_t> vertex_node;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    const Rational& value = f.vertex_value(v);
    if (lo <= value && value <= hi) {
      vertex_node.emplace(v, slice.vertices.size());
      slice.vertices.push_back(v);
    }
  }
  for (std::size_t e = 0; e < graph.edges().size(); ++e) {
    const auto& prof = f.profile(e);
    const std::size_t first = slice.pieces.size();
    for (std::size_t k = 0; k + 1 < prof.size(); ++k) {
      auto range = clip_segment(prof[k], prof[k + 1], lo, hi);
      if (!range) continue;
      if (slice.pieces.size() > first && slice.pieces.back().to == range->first) {
        slice.pieces.back().to = std::move(range->second);
      } else {
        slice.pieces.push_back({e, std::move(range->first), std::move(range->second)});
      }
    }
  }

  const std::size_t nv = slice.vertices.size();
  detail::UnionFind uf(nv + slice.pieces.size());
  for (std::size_t k = 0; k < slice.pieces.size(); ++k) {
    const auto& piece = slice.pieces[k];
    const Edge& e = graph.edge(piece.edge);
    const std::size_t node = nv + k;
    bool acyclic = true;
    if (piece.from.is_zero()) acyclic = uf.unite(node, vertex_node.at(e.u)) && acyclic;
    if (piece.to == e.length) acyclic = uf.unite(node, vertex_node.at(e.v)) && acyclic;
    if (!acyclic) {
      throw UnsupportedInput("slice [" + lo.str() + ", " + hi.str() +
                             "] contains a cycle; the function is constant along a loop");
    }
  }
  std::map<std::size_t, std::size_t> root_id;
  for (std::size_t node = 0; node < nv + slice.pieces.size(); ++node) {
    const auto [it, inserted] = root_id.emplace(uf.find(node), root_id.size());
    slice.component.push_back(it->second);
  }
  slice.component_count = root_id.size();
  return slice;
}

LevelSetZigzag build_lzz_sequence(const PLGraphFunction& f) {
  LevelSetZigzag out;
  out.sequence = CriticalSequence::from_criticals(critical_values(f));
  const auto& s = out.sequence.regulars;
  const std::size_t n = out.sequence.criticals.size();
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) out.spaces.push_back(build_slice(f, s[k - 1], s[k]));
    out.spaces.push_back(build_slice(f, s[k], s[k]));
  }
  if (out.spaces.front().component_count != 0 || out.spaces.back().component_count != 0) {
    throw std::logic_error("outer level sets of a function on a finite graph must be empty");
  }

  const MetricGraph& graph = f.graph();
  std::vector<std::size_t> dims;
  for (const auto& space : out.spaces) dims.push_back(space.component_count);
  std::vector<Arrow> arrows;
  // Level sets sit at even 0-based indices; each maps into its neighbours.
  for (std::size_t slot = 0; slot + 1 < out.spaces.size(); ++slot) {
    const bool forward = slot % 2 == 0;
    const SliceComplex& level = out.spaces[forward ? slot : slot + 1];
    const SliceComplex& slab = out.spaces[forward ? slot + 1 : slot];
    GF2Matrix m(slab.component_count, level.component_count);
    const std::size_t nv = level.vertices.size();
    for (std::size_t k = 0; k < level.pieces.size(); ++k) {
      const auto& point = level.pieces[k];
      m.set(slab.component_of(graph, point.edge, point.from), level.component[nv + k], true);
    }
    for (std::size_t k = 0; k < nv; ++k) {
      const std::size_t v = level.vertices[k];
      for (std::size_t j = 0; j < slab.vertices.size(); ++j) {
        if (slab.vertices[j] == v) m.set(slab.component[j], level.component[k], true);
      }
    }
    arrows.push_back({forward ? ArrowDirection::Forward : ArrowDirection::Backward, std::move(m)});
  }
  out.module = ZigzagModule(std::move(dims), std::move(arrows));
  return out;
}

TypedInterval to_typed_interval(const IndexInterval& interval, const CriticalSequence& sequence) {
  const auto& a = sequence.criticals;  // a_k is a[k - 1]
  const std::size_t n = a.size();
  if (interval.birth < 2 || interval.death > 2 * n || interval.birth > interval.death) {
    throw std::out_of_range("index interval outside the level-set zigzag");
  }
  TypedInterval out;
  const std::size_t bk = interval.birth / 2;
  out.birth = a[bk - 1];
  out.left = interval.birth % 2 == 0 ? EndpointType::Closed : EndpointType::Open;
  const std::size_t dk = interval.death / 2;
  if (interval.death % 2 == 0) {
    out.death = a[dk - 1];
    out.right = EndpointType::Closed;
  } else {
    out.death = a[dk];
    out.right = EndpointType::Open;
  }
  return out;
}

std::vector<TypedInterval> lzz_intervals(const PLGraphFunction& f) {
  const LevelSetZigzag lzz = build_lzz_sequence(f);
  std::vector<TypedInterval> out;
  for (const auto& iv : interval_decomposition(lzz.module)) {
    out.push_back(to_typed_interval(iv, lzz.sequence));
  }
  return out;
}

PersistenceDiagram lzz_diagram(const PLGraphFunction& f) {
  std::vector<DiagramPoint> points;
  for (const auto& iv : lzz_intervals(f)) points.emplace_back(iv.birth, iv.death, iv.dim_label());
  return PersistenceDiagram(std::move(points));
}

PersistenceDiagram restricted_lzz_diagram(const PLGraphFunction& f,
                                          const RestrictionInterval& interval) {
  return restrict_diagram(lzz_diagram(f), interval);
}

}  // namespace zzlocal
