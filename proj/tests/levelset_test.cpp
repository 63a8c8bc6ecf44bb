#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "zzlocal/errors.hpp"
#include "zzlocal/levelset.hpp"

namespace zzlocal {
namespace {

using testing::Rng;
using Dims = std::vector<std::size_t>;

MetricGraph path3() { return MetricGraph({"a", "b"}, {{0, 1, 3}}); }
MetricGraph loop10() { return MetricGraph({"v"}, {{0, 0, 10}}); }

PLGraphFunction f_end() { return distance_function(path3(), GraphPoint::at_vertex(0)); }
PLGraphFunction f_loop() { return distance_function(loop10(), GraphPoint::at_vertex(0)); }
PLGraphFunction f_mid() {
  const auto g = path3();
  return distance_function(g, GraphPoint::on_edge(g, 0, Rational(3, 2)));
}

PersistenceDiagram dg(std::vector<DiagramPoint> pts) { return PersistenceDiagram(std::move(pts)); }

TEST(CriticalSequence, Interleaving) {
  const auto seq = CriticalSequence::from_criticals({0, 3, 4});
  EXPECT_EQ(seq.regulars, (std::vector<Rational>{-1, Rational(3, 2), Rational(7, 2), 5}));
  EXPECT_THROW(CriticalSequence::from_criticals({}), InputError);
  EXPECT_THROW(CriticalSequence::from_criticals({1, 1}), InputError);
}

TEST(LevelSetZigzag, Dimensions) {
  EXPECT_EQ(build_lzz_sequence(f_end()).module.dims(), (Dims{0, 1, 1, 1, 0}));
  EXPECT_EQ(build_lzz_sequence(f_loop()).module.dims(), (Dims{0, 1, 2, 1, 0}));
  EXPECT_EQ(build_lzz_sequence(f_mid()).module.dims(), (Dims{0, 1, 2, 2, 0}));
}

TEST(LevelSetZigzag, ArrowsAlternate) {
  const auto m = build_lzz_sequence(f_loop()).module;
  for (std::size_t k = 0; k < m.arrows().size(); ++k) {
    EXPECT_EQ(m.arrows()[k].direction, k % 2 == 0 ? ArrowDirection::Forward : ArrowDirection::Backward);
  }
}

TEST(TypedInterval, Conversion) {
  const auto seq = CriticalSequence::from_criticals({0, 5});
  EXPECT_EQ(to_typed_interval({2, 4}, seq), (TypedInterval{0, 5, EndpointType::Closed, EndpointType::Closed}));
  EXPECT_EQ(to_typed_interval({3, 3}, seq), (TypedInterval{0, 5, EndpointType::Open, EndpointType::Open}));
  EXPECT_EQ(to_typed_interval({3, 4}, seq), (TypedInterval{0, 5, EndpointType::Open, EndpointType::Closed}));
  EXPECT_EQ(to_typed_interval({2, 3}, seq), (TypedInterval{0, 5, EndpointType::Closed, EndpointType::Open}));
  EXPECT_EQ(to_typed_interval({2, 2}, seq), (TypedInterval{0, 0, EndpointType::Closed, EndpointType::Closed}));
}

TEST(LzzDiagram, Examples) {
  EXPECT_EQ(lzz_diagram(f_loop()), dg({{0, 5, 0}, {0, 5, 1}}));
  EXPECT_EQ(lzz_diagram(f_end()), dg({{0, 3, 0}}));
  EXPECT_EQ(lzz_diagram(f_mid()), dg({{0, Rational(3, 2), 0}, {0, Rational(3, 2), 1}}));
}

TEST(LzzDiagram, EndpointTypes) {
  const auto loop = lzz_intervals(f_loop());
  ASSERT_EQ(loop.size(), 2U);
  EXPECT_NE(std::find(loop.begin(), loop.end(), TypedInterval{0, 5, EndpointType::Open, EndpointType::Open}),
            loop.end());
  const auto mid = lzz_intervals(f_mid());
  EXPECT_NE(std::find(mid.begin(), mid.end(),
                      TypedInterval{0, Rational(3, 2), EndpointType::Open, EndpointType::Closed}),
            mid.end());
}

TEST(LzzDiagram, ParallelEdges) {
  const MetricGraph g({"a", "b"}, {{0, 1, 3}, {0, 1, 5}});
  EXPECT_EQ(lzz_diagram(distance_function(g, GraphPoint::at_vertex(0))), dg({{0, 4, 0}, {0, 4, 1}}));
}

TEST(RestrictedLzz, Examples) {
  EXPECT_EQ(restricted_lzz_diagram(f_loop(), {0, 2}), dg({{0, 2, 0}, {0, 2, 1}}));
  EXPECT_EQ(restricted_lzz_diagram(f_end(), {0, 5}), dg({{0, 3, 0}}));
  EXPECT_TRUE(restricted_lzz_diagram(f_end(), {4, 5}).empty());
}

TEST(LevelSetZigzag, ConstantOnCycleIsUnsupported) {
  const PLGraphFunction flat(loop10(), {{{0, 1}, {10, 1}}});
  EXPECT_THROW(build_lzz_sequence(flat), UnsupportedInput);
  const MetricGraph two({"a", "b"}, {{0, 1, 2}, {0, 1, 2}});
  const PLGraphFunction level(two, {{{0, 0}, {2, 0}}, {{0, 0}, {2, 0}}});
  EXPECT_THROW(lzz_diagram(level), UnsupportedInput);
}

TEST(LevelSetZigzag, ConstantEdgeOnATree) {
  const PLGraphFunction f(path3(), {{{0, 2}, {3, 2}}});
  EXPECT_EQ(build_lzz_sequence(f).module.dims(), (Dims{0, 1, 0}));
  EXPECT_TRUE(lzz_diagram(f).empty());
}

class LzzProperty : public ::testing::Test {
 protected:
  Rng rng{1234};

  PLGraphFunction random_geodesic(const MetricGraph& g) {
    return distance_function(g, testing::random_graph_point(rng, g));
  }
};

TEST_F(LzzProperty, LevelSetComponentsMatchDirectCount) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_metric_graph(rng);
    const auto f = random_geodesic(g);
    const auto lzz = build_lzz_sequence(f);
    const auto intervals = interval_decomposition(lzz.module);
    for (std::size_t k = 0; k < lzz.sequence.regulars.size(); ++k) {
      const std::size_t index = 2 * k + 1;
      const auto through = std::count_if(intervals.begin(), intervals.end(),
                                         [&](const IndexInterval& iv) { return iv.contains(index); });
      ASSERT_EQ(static_cast<std::size_t>(through), testing::level_set_points(f, lzz.sequence.regulars[k]))
          << "trial " << trial << " k=" << k;
    }
  }
}

TEST_F(LzzProperty, EverySliceHoldsOneCriticalValue) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_metric_graph(rng);
    const auto f = random_geodesic(g);
    const auto lzz = build_lzz_sequence(f);
    const auto crit = critical_values(f);
    ASSERT_EQ(lzz.spaces.size(), 2 * crit.size() + 1);
    for (std::size_t k = 1; k < lzz.spaces.size(); k += 2) {
      const auto& s = lzz.spaces[k];
      const auto inside = std::count_if(crit.begin(), crit.end(),
                                        [&](const Rational& a) { return s.lo <= a && a <= s.hi; });
      ASSERT_EQ(inside, 1);
    }
  }
}

TEST_F(LzzProperty, RestrictionDoesNotIncreaseDistance) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_metric_graph(rng);
    const auto df = lzz_diagram(random_geodesic(g));
    const auto dh = lzz_diagram(random_geodesic(g));
    const auto full = bottleneck_distance(df, dh);
    for (int k = 0; k < 5; ++k) {
      const auto interval = testing::random_interval(rng, -2, 20);
      ASSERT_LE(bottleneck_distance(restrict_diagram(df, interval), restrict_diagram(dh, interval)), full);
    }
  }
}

TEST_F(LzzProperty, Stability) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_metric_graph(rng);
    const auto f = random_geodesic(g);
    const auto h = random_geodesic(g);
    ASSERT_LE(bottleneck_distance(lzz_diagram(f), lzz_diagram(h)), ExtReal(sup_norm_difference(f, h)))
        << "trial " << trial;
  }
}

TEST_F(LzzProperty, EssentialFreeAndNonnegative) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_metric_graph(rng);
    const auto d = lzz_diagram(random_geodesic(g));
    std::size_t zero_dim = 0;
    for (const auto& p : d.points()) {
      ASSERT_TRUE(p.death.is_finite());
      ASSERT_GE(p.birth, Rational(0));
      if (p.dim == 0) ++zero_dim;
    }
    ASSERT_EQ(zero_dim, 1U);
  }
}

}  // namespace
}  // namespace zzlocal
