// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "zzlocal/zzlocal.hpp"

namespace {

using namespace zzlocal;
using testing::Rng;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string counts(std::size_t violations, std::size_t checks) {
  std::ostringstream out;
  out << violations << " violations in " << checks << " checks";
  return out.str();
}

Outcome projection_contraction() {
  const RestrictionInterval interval(0, 5);
  const std::vector<std::pair<DiagramPoint, ProjectionCase>> grid{
      {{1, 3}, ProjectionCase::A},  {{1, 7}, ProjectionCase::B},   {{-2, 3}, ProjectionCase::C},
      {{-2, 7}, ProjectionCase::D}, {{6, 8}, ProjectionCase::E},   {{-3, -1}, ProjectionCase::F}};
  std::size_t violations = 0;
  std::size_t pairs = 0;
  for (const auto& [p, c] : grid) {
    if (classify(p, interval) != c) return {false, "grid point in the wrong case"};
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i; j < grid.size(); ++j) {
      const auto& p = grid[i].first;
      const auto& q = grid[j].first;
      ++pairs;
      if (linf_distance(project_point(p, interval), project_point(q, interval)) > linf_distance(p, q)) {
        ++violations;
      }
    }
  }
  return {violations == 0 && pairs == 21, counts(violations, pairs) + " (pairings incl. self)"};
}

Outcome restriction_stability() {
  Rng rng(1001);
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing::random_diagram(rng, 10);
    const auto b = testing::random_diagram(rng, 10);
    const ExtReal full = bottleneck_distance(a, b);
    for (int k = 0; k < 10; ++k) {
      const auto interval = testing::random_interval(rng);
      ++checks;
      if (bottleneck_distance(restrict_diagram(a, interval), restrict_diagram(b, interval)) > full) ++violations;
    }
  }
  return {violations == 0, counts(violations, checks)};
}

PersistenceDiagram at_most(const PersistenceDiagram& d, std::size_t n) {
  std::vector<DiagramPoint> pts(d.points().begin(), d.points().begin() + std::min(n, d.size()));
  return PersistenceDiagram(std::move(pts));
}

Outcome bottleneck_oracle() {
  Rng rng(1002);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = at_most(testing::random_diagram(rng, 5, 0.15), 5);
    const auto b = at_most(testing::random_diagram(rng, 5, 0.15), 5);
    if (bottleneck_distance(a, b) != testing::brute_force_bottleneck(a, b)) ++mismatches;
  }
  return {mismatches == 0, std::to_string(mismatches) + " mismatches in 200 cases"};
}

Outcome decomposition_oracle() {
  Rng rng(1003);
  std::size_t failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto planted = testing::random_planted(rng, 8, 5);
    const auto module = testing::scramble(rng, direct_sum_of_intervals(planted.directions, planted.intervals));
    auto found = interval_decomposition(module);
    std::sort(planted.intervals.begin(), planted.intervals.end());
    bool ok = found == planted.intervals;
    for (std::size_t i = 1; i <= module.length(); ++i) {
      const auto through = std::count_if(found.begin(), found.end(),
                                         [&](const IndexInterval& iv) { return iv.contains(i); });
      ok = ok && static_cast<std::size_t>(through) == module.dims()[i - 1];
    }
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " failures in 200 planted modules"};
}

Outcome worked_level_set_examples() {
  const MetricGraph loop({"v"}, {{0, 0, 10}});
  const MetricGraph path({"a", "b"}, {{0, 1, 3}});
  const auto loop_dg = lzz_diagram(distance_function(loop, GraphPoint::at_vertex(0)));
  const auto mid_dg = lzz_diagram(distance_function(path, GraphPoint::on_edge(path, 0, Rational(3, 2))));
  const PersistenceDiagram loop_expected({{0, 5, 0}, {0, 5, 1}});
  const PersistenceDiagram mid_expected({{0, Rational(3, 2), 0}, {0, Rational(3, 2), 1}});
  const bool ok = loop_dg == loop_expected && mid_dg == mid_expected;
  return {ok, std::string("self-loop ") + (loop_dg == loop_expected ? "exact" : "differs") + ", midpoint " +
                  (mid_dg == mid_expected ? "exact" : "differs")};
}

struct GraphCase {
  MetricGraph graph;
  GraphPoint u;
  GraphPoint v;
};

std::vector<GraphCase> graph_corpus() {
  Rng rng(1006);
  std::vector<GraphCase> out;
  for (int trial = 0; trial < 100; ++trial) {
    auto g = testing::random_metric_graph(rng, 8, 12);
    const auto u = testing::random_graph_point(rng, g);
    const auto v = testing::random_graph_point(rng, g);
    out.push_back({std::move(g), u, v});
  }
  return out;
}

Outcome base_point_stability() {
  const std::vector<std::optional<Rational>> radii{Rational(1), Rational(2), Rational(5), std::nullopt};
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (const auto& c : graph_corpus()) {
    const ExtReal d(geodesic_distance(c.graph, c.u, c.v));
    const auto du = phi(c.graph, c.u);
    const auto dv = phi(c.graph, c.v);
    for (const auto& r : radii) {
      ++checks;
      const ExtReal db = r ? bottleneck_distance(restrict_diagram(du, {0, *r}), restrict_diagram(dv, {0, *r}))
                           : bottleneck_distance(du, dv);
      if (db > d) ++violations;
    }
  }
  const MetricGraph path({"a", "b"}, {{0, 1, 3}});
  const auto mid = GraphPoint::on_edge(path, 0, Rational(3, 2));
  const ExtReal tight = bottleneck_distance(phi(path, GraphPoint::at_vertex(0)), phi(path, mid));
  const bool tight_ok = tight == ExtReal(Rational(3, 2)) &&
                        ExtReal(geodesic_distance(path, GraphPoint::at_vertex(0), mid)) == tight;
  return {violations == 0 && tight_ok, counts(violations, checks) + ", tight case d_B = " + tight.str()};
}

Outcome level_set_stability() {
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (const auto& c : graph_corpus()) {
    const auto fu = distance_function(c.graph, c.u);
    const auto fv = distance_function(c.graph, c.v);
    ++checks;
    if (bottleneck_distance(lzz_diagram(fu), lzz_diagram(fv)) > ExtReal(sup_norm_difference(fu, fv))) {
      ++violations;
    }
  }
  return {violations == 0, counts(violations, checks)};
}

Outcome local_distortion_monotone() {
  Rng rng(1008);
  const std::vector<Rational> radii{Rational(1, 2), 1, Rational(3, 2), 2, 3, 4, 6, 9};
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto g1 = testing::random_metric_graph(rng, 8, 12);
    const auto g2 = testing::random_metric_graph(rng, 8, 12);
    Rational previous(0);
    for (const auto& r : radii) {
      const Rational value = persistence_distortion(g1, g2, 1, r).d_pd;
      ++checks;
      if (value < previous) ++violations;
      previous = value;
    }
  }
  return {violations == 0, counts(violations, checks)};
}

Outcome matching_restriction() {
  Rng rng(1009);
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_bifiltration(rng, 15);
    const auto b = testing::random_bifiltration(rng, 15);
    const auto grid = line_grid(a, b, 16, 16);
    for (int k = 0; k < 5; ++k) {
      const Box box{testing::random_interval(rng, -1, 6), testing::random_interval(rng, -1, 6)};
      for (int p = 0; p <= 1; ++p) {
        ExtReal full(0);
        ExtReal restricted(0);
        for (const auto& c : compare_along_lines(a, b, grid, p, box)) {
          ++checks;
          if (c.restricted > c.full) ++violations;
          full = std::max(full, scale(c.line.weight(), c.full));
          restricted = std::max(restricted, scale(c.line.weight(), c.restricted));
        }
        ++checks;
        if (restricted > full) ++violations;
      }
    }
  }
  return {violations == 0, counts(violations, checks)};
}

Outcome triangle_inequalities() {
  Rng rng(1010);
  std::size_t violations = 0;
  std::size_t checks = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_metric_graph(rng, 8, 12);
    const auto pts = sample_base_points(g, 1);
    for (int k = 0; k < 10; ++k) {
      const auto x = testing::random_graph_point(rng, g);
      const auto y = testing::random_graph_point(rng, g);
      const auto z = pts[static_cast<std::size_t>(testing::uniform(rng, 0, static_cast<long>(pts.size()) - 1))];
      ++checks;
      if (geodesic_distance(g, x, z) > geodesic_distance(g, x, y) + geodesic_distance(g, y, z)) ++violations;
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::random_diagram(rng, 10);
    const auto b = testing::random_diagram(rng, 10);
    const auto c = testing::random_diagram(rng, 10);
    const ExtReal ab = bottleneck_distance(a, b);
    const ExtReal bc = bottleneck_distance(b, c);
    ++checks;
    if (ab.is_finite() && bc.is_finite() && bottleneck_distance(a, c) > ExtReal(ab.value() + bc.value())) {
      ++violations;
    }
  }
  return {violations == 0, counts(violations, checks)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "projection contracts distances on the six-case grid", 1, projection_contraction},
      {2, "restriction does not increase bottleneck distance", 30, restriction_stability},
      {3, "bottleneck distance matches brute force", 30, bottleneck_oracle},
      {4, "interval decomposition recovers planted modules", 60, decomposition_oracle},
      {5, "worked level-set zigzag diagrams", 5, worked_level_set_examples},
      {6, "local diagrams are 1-Lipschitz in the base point", 120, base_point_stability},
      {7, "level-set zigzag stability under sup norm", 120, level_set_stability},
      {8, "local distortion nondecreasing in radius", 120, local_distortion_monotone},
      {9, "restricted matching distance bounded by matching distance", 120, matching_restriction},
      {10, "triangle inequalities for geodesics and bottleneck", 60, triangle_inequalities},
  };
  int failed = 0;
  double total = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += seconds;
    const bool pass = out.ok && seconds <= c.limit_seconds;
    if (!pass) ++failed;
    std::printf("[%s] %2d %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed in %.2f s\n", static_cast<int>(criteria.size()) - failed,
              criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
