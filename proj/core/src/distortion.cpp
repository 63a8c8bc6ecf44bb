#include "zzlocal/distortion.hpp"

#include <algorithm>
#include <stdexcept>

#include "zzlocal/errors.hpp"
#include "zzlocal/levelset.hpp"
#include "zzlocal/parallel.hpp"

namespace zzlocal {

PersistenceDiagram phi(const MetricGraph& graph, const GraphPoint& base,
                       const std::optional<Rational>& radius) {
  const PersistenceDiagram full = lzz_diagram(distance_function(graph, base));
  if (!radius) return full;
  return restrict_diagram(full, RestrictionInterval(Rational(0), *radius));
}

DiagramCloud diagram_cloud(const MetricGraph& graph, std::vector<GraphPoint> base_points,
                           const std::optional<Rational>& radius) {
  DiagramCloud cloud;
  cloud.diagrams.resize(base_points.size());
  parallel_for(base_points.size(),
               [&](std::size_t i) { cloud.diagrams[i] = phi(graph, base_points[i], radius); });
  cloud.base_points = std::move(base_points);
  cloud.radius = radius;
  return cloud;
}

DiagramCloud restrict_cloud(const DiagramCloud& cloud, const Rational& radius) {
  if (cloud.radius) throw std::invalid_argument("cloud is already restricted");
  const RestrictionInterval interval(Rational(0), radius);
  DiagramCloud out;
  out.base_points = cloud.base_points;
  out.radius = radius;
  for (const auto& d : cloud.diagrams) out.diagrams.push_back(restrict_diagram(d, interval));
  return out;
}

ExtReal hausdorff_bottleneck(std::span<const PersistenceDiagram> a,
                             std::span<const PersistenceDiagram> b) {
  if (a.empty() || b.empty()) throw InputError("diagram clouds must be nonempty");
  std::vector<ExtReal> table(a.size() * b.size());
  parallel_for(table.size(), [&](std::size_t k) {
    table[k] = bottleneck_distance(a[k / b.size()], b[k % b.size()]);
  });
  ExtReal result(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    ExtReal best = ExtReal::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) best = std::min(best, table[i * b.size() + j]);
    result = std::max(result, best);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    ExtReal best = ExtReal::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) best = std::min(best, table[i * b.size() + j]);
    result = std::max(result, best);
  }
  return result;
}

ExtReal hausdorff_bottleneck(const DiagramCloud& a, const DiagramCloud& b) {
  return hausdorff_bottleneck(std::span<const PersistenceDiagram>(a.diagrams),
                              std::span<const PersistenceDiagram>(b.diagrams));
}

Rational persistence_distortion(const DiagramCloud& a, const DiagramCloud& b) {
  const ExtReal d = hausdorff_bottleneck(a, b);
  // Level-set zigzag diagrams of finite graphs have no essential points.
  if (d.is_infinite()) throw std::logic_error("infinite distance between graph diagram clouds");
  return d.value();
}

DistortionReport persistence_distortion(const MetricGraph& g1, const MetricGraph& g2,
                                        std::size_t samples_per_edge,
                                        const std::optional<Rational>& radius) {
  if (!g1.connected() || !g2.connected()) throw InputError("metric graph is not connected");
  if (radius && radius->sign() < 0) throw InputError("radius must be nonnegative");
  const DiagramCloud a = diagram_cloud(g1, sample_base_points(g1, samples_per_edge), radius);
  const DiagramCloud b = diagram_cloud(g2, sample_base_points(g2, samples_per_edge), radius);
  DistortionReport report;
  report.d_pd = persistence_distortion(a, b);
  report.radius = radius;
  report.epsilon = std::max(sample_spacing(g1, samples_per_edge), sample_spacing(g2, samples_per_edge));
  report.samples_per_edge = samples_per_edge;
  return report;
}

}  // namespace zzlocal
