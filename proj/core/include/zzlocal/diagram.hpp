#pragma once

#include <span>
#include <vector>

#include "zzlocal/rational.hpp"

namespace zzlocal {

/// A point (birth, death) of a persistence diagram, tagged with a homology
/// dimension label. Only the death may be infinite.
struct DiagramPoint {
  Rational birth;
  ExtReal death;
  int dim = 0;

  DiagramPoint() = default;
  /// Throws InputError if birth > death or dim < 0.
  DiagramPoint(Rational b, ExtReal d, int label = 0);

  bool on_diagonal() const { return death.is_finite() && death.value() == birth; }

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
};

/// Canonical order: by dim label, then birth, then death.
bool canonical_less(const DiagramPoint& p, const DiagramPoint& q);

/// Finite multiset of off-diagonal points, kept in canonical order.
class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  /// Drops diagonal points and sorts.
  explicit PersistenceDiagram(std::vector<DiagramPoint> points);

  std::span<const DiagramPoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

  /// Distinct dim labels present, ascending.
  std::vector<int> labels() const;
  std::vector<DiagramPoint> with_label(int dim) const;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;

 private:
  std::vector<DiagramPoint> points_;
};

/// Closed interval [lo, hi] used to restrict diagrams.
struct RestrictionInterval {
  Rational lo;
  Rational hi;

  RestrictionInterval(Rational l, Rational h);
  bool contains(const RestrictionInterval& inner) const {
    return lo <= inner.lo && inner.hi <= hi;
  }
};

/// Position of a point relative to a restriction interval [r1, r2].
///   A: r1 <= b <= d <= r2       -> (b, d)
///   B: r1 <= b <= r2 <= d       -> (b, r2)
///   C: b <= r1 <= d <= r2       -> (r1, d)
///   D: b <= r1 <= r2 <= d       -> (r1, r2)
///   E: r2 <= b                  -> (b, b)
///   F: d <= r1                  -> (d, d)
/// Boundary ties resolve to the first matching case; overlapping cases agree
/// on the image. An infinite death counts as d >= r2.
enum class ProjectionCase { A, B, C, D, E, F };

ProjectionCase classify(const DiagramPoint& p, const RestrictionInterval& interval);

/// The projection onto the restricted region. The result may lie on the
/// diagonal (cases E and F, or collapse when r1 = r2).
DiagramPoint project_point(const DiagramPoint& p, const RestrictionInterval& interval);

/// Projects every point and drops the ones landing on the diagonal.
PersistenceDiagram restrict_diagram(const PersistenceDiagram& diagram,
                                    const RestrictionInterval& interval);

/// L-infinity distance; inf - inf contributes 0, finite vs inf is inf.
ExtReal linf_distance(const DiagramPoint& p, const DiagramPoint& q);

/// Distance to the nearest diagonal point, (death - birth) / 2.
ExtReal diagonal_gap(const DiagramPoint& p);

/// True iff a diagonal-augmented perfect matching exists with every matched
/// pair within delta. Points are only matched to points with the same label.
bool bottleneck_decision(const PersistenceDiagram& a, const PersistenceDiagram& b,
                         const Rational& delta);

/// Exact bottleneck distance: per label, the smallest candidate value
/// accepted by bottleneck_decision; the maximum over labels.
ExtReal bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b);

}  // namespace zzlocal
