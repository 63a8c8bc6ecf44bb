#include "zzlocal/multiparam.hpp"

#include <algorithm>
#include <map>

#include "zzlocal/errors.hpp"
#include "zzlocal/parallel.hpp"

namespace zzlocal {

Bifiltration::Bifiltration(std::vector<BifilteredSimplex> simplices) {
  std::map<Simplex, Grade2> grade;
  for (auto& s : simplices) {
    std::sort(s.vertices.begin(), s.vertices.end());
    if (!grade.emplace(s.vertices, s.grade).second) {
      throw InputError("simplex listed twice; only one-critical bifiltrations are supported");
    }
  }
  for (const auto& s : simplices) {
    for (const auto& f : boundary_faces(s.vertices)) {
      const auto it = grade.find(f);
      if (it == grade.end()) throw InputError("bifiltration is missing a face");
      if (!precedes(it->second, s.grade)) {
        throw InputError("face grade does not precede coface grade");
      }
    }
  }
  simplices_ = std::move(simplices);
}

Line::Line(Grade2 basepoint, Grade2 direction) : p0_(std::move(basepoint)) {
  if (direction[0].sign() <= 0 || direction[1].sign() <= 0) {
    throw InputError("line direction must be positive in both coordinates");
  }
  const Rational norm = std::max(direction[0], direction[1]);
  m_ = {direction[0] / norm, direction[1] / norm};
}

Rational Line::entry_time(const Grade2& grade) const {
  return std::max((grade[0] - p0_[0]) / m_[0], (grade[1] - p0_[1]) / m_[1]);
}

LineSample line_grid(const Bifiltration& a, const Bifiltration& b, std::size_t directions,
                     std::size_t offsets) {
  if (directions == 0 || offsets == 0) throw InputError("line grid must be nonempty");
  std::optional<Grade2> lo;
  std::optional<Grade2> hi;
  for (const auto* bf : {&a, &b}) {
    for (const auto& s : bf->simplices()) {
      if (!lo) {
        lo = s.grade;
        hi = s.grade;
      }
      for (int i = 0; i < 2; ++i) {
        (*lo)[i] = std::min((*lo)[i], s.grade[i]);
        (*hi)[i] = std::max((*hi)[i], s.grade[i]);
      }
    }
  }
  if (!lo) lo = hi = Grade2{Rational(0), Rational(0)};

  std::vector<Grade2> dirs;
  const std::size_t shallow = (directions + 1) / 2;
  const std::size_t steep = directions - shallow;
  for (std::size_t k = 1; k <= shallow; ++k) {
    dirs.push_back({Rational(1), Rational(static_cast<long>(k), static_cast<long>(shallow))});
  }
  for (std::size_t k = 1; k <= steep; ++k) {
    dirs.push_back({Rational(static_cast<long>(k), static_cast<long>(steep + 1)), Rational(1)});
  }

  LineSample sample;
  for (const auto& m : dirs) {
    for (std::size_t j = 0; j < offsets; ++j) {
      const Rational u = offsets == 1 ? Rational(1, 2)
                                      : Rational(static_cast<long>(j), static_cast<long>(offsets - 1));
      const Grade2 p0{(*lo)[0] + u * ((*hi)[0] - (*lo)[0]), (*hi)[1] - u * ((*hi)[1] - (*lo)[1])};
      sample.emplace_back(p0, m);
    }
  }
  return sample;
}

FilteredComplex slice_filtration(const Bifiltration& bifiltration, const Line& line) {
  std::vector<FilteredSimplex> out;
  out.reserve(bifiltration.simplices().size());
  for (const auto& s : bifiltration.simplices()) {
    out.push_back({s.vertices, line.entry_time(s.grade)});
  }
  return FilteredComplex(std::move(out));
}

PersistenceDiagram diagram_along_line(const Bifiltration& bifiltration, const Line& line, int p) {
  return standard_persistence(slice_filtration(bifiltration, line), p);
}

std::optional<RestrictionInterval> line_box_clip(const Line& line, const Box& box) {
  const auto& p0 = line.basepoint();
  const auto& m = line.direction();
  Rational t1 = std::max((box.x.lo - p0[0]) / m[0], (box.y.lo - p0[1]) / m[1]);
  Rational t2 = std::min((box.x.hi - p0[0]) / m[0], (box.y.hi - p0[1]) / m[1]);
  if (t2 < t1) return std::nullopt;
  return RestrictionInterval(std::move(t1), std::move(t2));
}

std::vector<LineComparison> compare_along_lines(const Bifiltration& a, const Bifiltration& b,
                                                const LineSample& sample, int p,
                                                const std::optional<Box>& box) {
  if (sample.empty()) throw InputError("line sample must be nonempty");
  std::vector<std::optional<LineComparison>> slots(sample.size());
  parallel_for(sample.size(), [&](std::size_t k) {
    const Line& line = sample[k];
    const PersistenceDiagram da = diagram_along_line(a, line, p);
    const PersistenceDiagram db = diagram_along_line(b, line, p);
    LineComparison cmp{line, bottleneck_distance(da, db), ExtReal(0), false};
    if (box) {
      if (const auto clip = line_box_clip(line, *box)) {
        cmp.hits_box = true;
        cmp.restricted = bottleneck_distance(restrict_diagram(da, *clip), restrict_diagram(db, *clip));
      }
    }
    slots[k] = std::move(cmp);
  });
  std::vector<LineComparison> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

ExtReal matching_distance(const Bifiltration& a, const Bifiltration& b, const LineSample& sample,
                          int p) {
  ExtReal best(0);
  for (const auto& cmp : compare_along_lines(a, b, sample, p)) {
    best = std::max(best, scale(cmp.line.weight(), cmp.full));
  }
  return best;
}

ExtReal restricted_matching_distance(const Bifiltration& a, const Bifiltration& b, const Box& box,
                                     const LineSample& sample, int p) {
  ExtReal best(0);
  for (const auto& cmp : compare_along_lines(a, b, sample, p, box)) {
    best = std::max(best, scale(cmp.line.weight(), cmp.restricted));
  }
  return best;
}

}  // namespace zzlocal
