#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zzlocal/diagram.hpp"
#include "zzlocal/metric_graph.hpp"

namespace zzlocal {

/// Level-set zigzag diagram of the geodesic distance function from `base`,
/// restricted to [0, radius] when a radius is given.
PersistenceDiagram phi(const MetricGraph& graph, const GraphPoint& base,
                       const std::optional<Rational>& radius = std::nullopt);

/// Diagrams of phi over a set of base points, all at one radius setting.
struct DiagramCloud {
  std::vector<GraphPoint> base_points;
  std::vector<PersistenceDiagram> diagrams;
  std::optional<Rational> radius;
};

/// Evaluated in parallel over base points; order follows `base_points`.
DiagramCloud diagram_cloud(const MetricGraph& graph, std::vector<GraphPoint> base_points,
                           const std::optional<Rational>& radius = std::nullopt);

/// Hausdorff distance between two finite diagram sets under the bottleneck
/// distance. Throws InputError if either side is empty.
/// Restricts every diagram of an unrestricted cloud to [0, radius].
DiagramCloud restrict_cloud(const DiagramCloud& cloud, const Rational& radius);

ExtReal hausdorff_bottleneck(std::span<const PersistenceDiagram> a,
                             std::span<const PersistenceDiagram> b);
ExtReal hausdorff_bottleneck(const DiagramCloud& a, const DiagramCloud& b);

struct DistortionReport {
  /// Hausdorff distance over sampled base points only. phi is 1-Lipschitz,
  /// so this is within `epsilon` of the value over the whole realization.
  Rational d_pd;
  std::optional<Rational> radius;
  Rational epsilon;
  std::size_t samples_per_edge = 0;
};

DistortionReport persistence_distortion(const MetricGraph& g1, const MetricGraph& g2,
                                        std::size_t samples_per_edge,
                                        const std::optional<Rational>& radius = std::nullopt);

/// As above, but reusing precomputed clouds (e.g. across a radius grid).
Rational persistence_distortion(const DiagramCloud& a, const DiagramCloud& b);

}  // namespace zzlocal
