#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zzlocal/complex.hpp"
#include "zzlocal/diagram.hpp"

namespace zzlocal {

using Grade2 = std::array<Rational, 2>;

/// u <= v coordinatewise.
inline bool precedes(const Grade2& u, const Grade2& v) { return u[0] <= v[0] && u[1] <= v[1]; }

struct BifilteredSimplex {
  Simplex vertices;
  Grade2 grade;
};

/// One-critical two-parameter filtration of a simplicial complex.
class Bifiltration {
 public:
  Bifiltration() = default;
  /// Throws InputError on missing faces, repeated simplices (multi-critical
  /// input), or a face whose grade does not precede its coface's.
  explicit Bifiltration(std::vector<BifilteredSimplex> simplices);

  const std::vector<BifilteredSimplex>& simplices() const { return simplices_; }
  bool empty() const { return simplices_.empty(); }

 private:
  std::vector<BifilteredSimplex> simplices_;
};

/// Line p0 + t m with m normalized to max(m1, m2) = 1 and min(m1, m2) > 0.
class Line {
 public:
  /// Normalizes `direction`; throws InputError unless both components are positive.
  Line(Grade2 basepoint, Grade2 direction);

  const Grade2& basepoint() const { return p0_; }
  const Grade2& direction() const { return m_; }
  /// min(m1, m2), in (0, 1].
  const Rational& weight() const { return std::min(m_[0], m_[1]); }
  Grade2 at(const Rational& t) const { return {p0_[0] + t * m_[0], p0_[1] + t * m_[1]}; }
  /// Smallest t with grade <= at(t): max_i (grade_i - p0_i) / m_i.
  Rational entry_time(const Grade2& grade) const;

 private:
  Grade2 p0_;
  Grade2 m_;
};

using LineSample = std::vector<Line>;

/// Axis-aligned box I1 x I2.
struct Box {
  RestrictionInterval x;
  RestrictionInterval y;
};

/// Grid of `directions` x `offsets` lines covering the joint grade bounding
/// box of a and b. Directions include the diagonal; basepoints are spread
/// along the box's anti-diagonal, which every positively sloped line through
/// the box crosses.
LineSample line_grid(const Bifiltration& a, const Bifiltration& b, std::size_t directions = 16,
                     std::size_t offsets = 16);

FilteredComplex slice_filtration(const Bifiltration& bifiltration, const Line& line);

PersistenceDiagram diagram_along_line(const Bifiltration& bifiltration, const Line& line, int p);

/// Parameter range of the line inside the box, or nothing if it misses.
std::optional<RestrictionInterval> line_box_clip(const Line& line, const Box& box);

struct LineComparison {
  Line line;
  /// Unweighted bottleneck distance of the two slice diagrams.
  ExtReal full;
  /// Same after restricting both to the box clip; 0 when the line misses the box.
  ExtReal restricted;
  bool hits_box = false;
};

/// Per-line unweighted distances, evaluated in parallel over the sample.
std::vector<LineComparison> compare_along_lines(const Bifiltration& a, const Bifiltration& b,
                                                const LineSample& sample, int p,
                                                const std::optional<Box>& box = std::nullopt);

/// max over sampled lines of weight * d_B. A lower bound for the sup over all
/// lines. Throws InputError on an empty sample.
ExtReal matching_distance(const Bifiltration& a, const Bifiltration& b, const LineSample& sample,
                          int p);

ExtReal restricted_matching_distance(const Bifiltration& a, const Bifiltration& b, const Box& box,
                                     const LineSample& sample, int p);

}  // namespace zzlocal
