#pragma once

#include <cstddef>
#include <vector>

#include "zzlocal/diagram.hpp"
#include "zzlocal/metric_graph.hpp"
#include "zzlocal/zigzag.hpp"

namespace zzlocal {

/// Critical values a_1 < ... < a_n with regular values interleaved as
/// s_0 < a_1 < s_1 < ... < a_n < s_n. Interior s_k are midpoints; the ends
/// are padded by one.
struct CriticalSequence {
  std::vector<Rational> criticals;
  std::vector<Rational> regulars;

  /// Throws InputError if `criticals` is empty or not strictly increasing.
  static CriticalSequence from_criticals(std::vector<Rational> criticals);
};

/// Maximal sub-segment [from, to] of an edge lying in a slab.
struct SlicePiece {
  std::size_t edge = 0;
  Rational from;
  Rational to;
};

/// Combinatorial model of f^{-1}([lo, hi]) on a metric graph: graph vertices
/// inside the slab plus edge pieces, grouped into connected components.
struct SliceComplex {
  Rational lo;
  Rational hi;
  std::vector<std::size_t> vertices;
  std::vector<SlicePiece> pieces;
  /// Component id per node; vertices first, then pieces.
  std::vector<std::size_t> component;
  std::size_t component_count = 0;

  /// Component containing the point at `offset` on `edge`. Throws
  /// std::out_of_range if the point is not in the slice.
  std::size_t component_of(const MetricGraph& graph, std::size_t edge, const Rational& offset) const;
};

/// Builds the slice for lo <= hi. Throws UnsupportedInput if the slice
/// contains a cycle (its H1 would be nonzero).
SliceComplex build_slice(const PLGraphFunction& f, const Rational& lo, const Rational& hi);

/// The H0 level-set zigzag X_{s0} -> X_{s0}^{s1} <- X_{s1} -> ... <- X_{sn}.
/// Position 2k+1 (1-based) is the level set at s_k, position 2k the slice
/// [s_{k-1}, s_k] around a_k.
struct LevelSetZigzag {
  ZigzagModule module;
  CriticalSequence sequence;
  std::vector<SliceComplex> spaces;
};

LevelSetZigzag build_lzz_sequence(const PLGraphFunction& f);

enum class EndpointType { Open, Closed };

struct TypedInterval {
  Rational birth;
  Rational death;
  EndpointType left = EndpointType::Closed;
  EndpointType right = EndpointType::Closed;

  /// 0 for closed-left intervals, 1 for open-left ones.
  int dim_label() const { return left == EndpointType::Closed ? 0 : 1; }
  friend bool operator==(const TypedInterval&, const TypedInterval&) = default;
};

/// Converts a 1-based index interval of the level-set zigzag to values and
/// endpoint types:
///   birth 2k -> a_k closed, 2k+1 -> a_k open;
///   death 2k -> a_k closed, 2k+1 -> a_{k+1} open.
TypedInterval to_typed_interval(const IndexInterval& interval, const CriticalSequence& sequence);

std::vector<TypedInterval> lzz_intervals(const PLGraphFunction& f);

/// Level-set zigzag diagram with dim labels from the endpoint types.
PersistenceDiagram lzz_diagram(const PLGraphFunction& f);

PersistenceDiagram restricted_lzz_diagram(const PLGraphFunction& f,
                                          const RestrictionInterval& interval);

}  // namespace zzlocal
