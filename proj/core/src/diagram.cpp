#include "zzlocal/diagram.hpp"

#include <algorithm>
#include <set>

#include "zzlocal/errors.hpp"

namespace zzlocal {

DiagramPoint::DiagramPoint(Rational b, ExtReal d, int label)
    : birth(std::move(b)), death(std::move(d)), dim(label) {
  if (dim < 0) throw InputError("diagram point with negative dim label");
  if (death < ExtReal(birth)) {
    throw InputError("diagram point with birth " + birth.str() + " > death " + death.str());
  }
}

bool canonical_less(const DiagramPoint& p, const DiagramPoint& q) {
  if (p.dim != q.dim) return p.dim < q.dim;
  if (p.birth != q.birth) return p.birth < q.birth;
  return p.death < q.death;
}

PersistenceDiagram::PersistenceDiagram(std::vector<DiagramPoint> points) {
  std::erase_if(points, [](const DiagramPoint& p) { return p.on_diagonal(); });
  std::sort(points.begin(), points.end(), canonical_less);
  points_ = std::move(points);
}

std::vector<int> PersistenceDiagram::labels() const {
  std::vector<int> out;
  for (const auto& p : points_) {
    if (out.empty() || out.back() != p.dim) out.push_back(p.dim);
  }
  return out;
}

std::vector<DiagramPoint> PersistenceDiagram::with_label(int dim) const {
  std::vector<DiagramPoint> out;
  for (const auto& p : points_) {
    if (p.dim == dim) out.push_back(p);
  }
  return out;
}

RestrictionInterval::RestrictionInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InputError("restriction interval with lo " + lo.str() + " > hi " + hi.str());
}

ProjectionCase classify(const DiagramPoint& p, const RestrictionInterval& interval) {
  const Rational& b = p.birth;
  const ExtReal& d = p.death;
  const ExtReal r1(interval.lo);
  const ExtReal r2(interval.hi);
  if (interval.lo <= b && b <= interval.hi) {
    return d <= r2 ? ProjectionCase::A : ProjectionCase::B;
  }
  if (b < interval.lo) {
    if (d < r1) return ProjectionCase::F;
    return d <= r2 ? ProjectionCase::C : ProjectionCase::D;
  }
  return ProjectionCase::E;
}

DiagramPoint project_point(const DiagramPoint& p, const RestrictionInterval& interval) {
  switch (classify(p, interval)) {
    case ProjectionCase::A:
      return p;
    case ProjectionCase::B:
      return {p.birth, interval.hi, p.dim};
    case ProjectionCase::C:
      return {interval.lo, p.death, p.dim};
    case ProjectionCase::D:
      return {interval.lo, interval.hi, p.dim};
    case ProjectionCase::E:
      return {p.birth, p.birth, p.dim};
    case ProjectionCase::F:
      return {p.death.value(), p.death, p.dim};
  }
  return p;
}

PersistenceDiagram restrict_diagram(const PersistenceDiagram& diagram,
                                    const RestrictionInterval& interval) {
  std::vector<DiagramPoint> out;
  out.reserve(diagram.size());
  for (const auto& p : diagram.points()) out.push_back(project_point(p, interval));
  return PersistenceDiagram(std::move(out));
}

ExtReal linf_distance(const DiagramPoint& p, const DiagramPoint& q) {
  const Rational db = abs(p.birth - q.birth);
  if (p.death.is_infinite() && q.death.is_infinite()) return db;
  if (p.death.is_infinite() || q.death.is_infinite()) return ExtReal::infinity();
  return std::max(db, abs(p.death.value() - q.death.value()));
}

ExtReal diagonal_gap(const DiagramPoint& p) {
  if (p.death.is_infinite()) return ExtReal::infinity();
  return (p.death.value() - p.birth) / Rational(2);
}

namespace {

// Bottleneck subproblem for one dim label. Costs are precomputed once so the
// binary search only compares against delta.
class LabelMatching {
 public:
  LabelMatching(std::vector<DiagramPoint> a, std::vector<DiagramPoint> b)
      : n_(a.size()), m_(b.size()) {
    pair_cost_.reserve(n_ * m_);
    for (const auto& p : a) {
      for (const auto& q : b) pair_cost_.push_back(linf_distance(p, q));
    }
    for (const auto& p : a) gap_a_.push_back(diagonal_gap(p));
    for (const auto& q : b) gap_b_.push_back(diagonal_gap(q));
    const auto infinite = [](const DiagramPoint& p) { return p.death.is_infinite(); };
    essential_mismatch_ = std::count_if(a.begin(), a.end(), infinite) !=
                          std::count_if(b.begin(), b.end(), infinite);
  }

  bool essential_mismatch() const { return essential_mismatch_; }

  std::vector<Rational> candidates() const {
    std::set<Rational> values{Rational(0)};
    for (const auto* costs : {&pair_cost_, &gap_a_, &gap_b_}) {
      for (const auto& c : *costs) {
        if (c.is_finite()) values.insert(c.value());
      }
    }
    return {values.begin(), values.end()};
  }

  // Left side: points of a, then one diagonal proxy per point of b.
  // Right side: points of b, then one diagonal proxy per point of a.
  bool feasible(const Rational& delta) const {
    if (essential_mismatch_) return false;
    const ExtReal bound(delta);
    const std::size_t size = n_ + m_;
    std::vector<std::vector<std::size_t>> adj(size);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (pair_cost_[i * m_ + j] <= bound) adj[i].push_back(j);
      }
      if (gap_a_[i] <= bound) adj[i].push_back(m_ + i);
    }
    for (std::size_t j = 0; j < m_; ++j) {
      auto& row = adj[n_ + j];
      if (gap_b_[j] <= bound) row.push_back(j);
      for (std::size_t i = 0; i < n_; ++i) row.push_back(m_ + i);
    }
    return perfect_matching_exists(adj, size);
  }

 private:
  static bool perfect_matching_exists(const std::vector<std::vector<std::size_t>>& adj,
                                      std::size_t size) {
    constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::vector<std::size_t> match_right(size, kFree);
    std::vector<char> visited(size);
    // Kuhn's augmenting paths, iterative DFS.
    for (std::size_t root = 0; root < size; ++root) {
      std::fill(visited.begin(), visited.end(), 0);
      struct Frame {
        std::size_t left;
        std::size_t next;
        std::size_t via;
      };
      std::vector<Frame> stack{{root, 0, kFree}};
      bool augmented = false;
      while (!stack.empty() && !augmented) {
        Frame& top = stack.back();
        if (top.next == adj[top.left].size()) {
          stack.pop_back();
          continue;
        }
        const std::size_t r = adj[top.left][top.next++];
        if (visited[r]) continue;
        visited[r] = 1;
        if (match_right[r] == kFree) {
          // Flip the path: each frame's left takes the right vertex it descended through.
          std::size_t right = r;
          for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
            const std::size_t prev = it->via;
            match_right[right] = it->left;
            right = prev;
          }
          augmented = true;
        } else {
          stack.push_back({match_right[r], 0, r});
        }
      }
      if (!augmented) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t m_;
  std::vector<ExtReal> pair_cost_;
  std::vector<ExtReal> gap_a_;
  std::vector<ExtReal> gap_b_;
  bool essential_mismatch_ = false;
};

std::vector<int> union_labels(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  std::vector<int> la = a.labels();
  const std::vector<int> lb = b.labels();
  la.insert(la.end(), lb.begin(), lb.end());
  std::sort(la.begin(), la.end());
  la.erase(std::unique(la.begin(), la.end()), la.end());
  return la;
}

}  // namespace

bool bottleneck_decision(const PersistenceDiagram& a, const PersistenceDiagram& b,
                         const Rational& delta) {
  if (delta.sign() < 0) return false;
  for (int label : union_labels(a, b)) {
    if (!LabelMatching(a.with_label(label), b.with_label(label)).feasible(delta)) return false;
  }
  return true;
}

ExtReal bottleneck_distance(const PersistenceDiagram& a, const PersistenceDiagram& b) {
  Rational result(0);
  for (int label : union_labels(a, b)) {
    const LabelMatching problem(a.with_label(label), b.with_label(label));
    if (problem.essential_mismatch()) return ExtReal::infinity();
    const std::vector<Rational> values = problem.candidates();
    // Feasibility is monotone in delta and the largest candidate is always feasible.
    std::size_t lo = 0;
    std::size_t hi = values.size() - 1;
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (problem.feasible(values[mid])) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    result = std::max(result, values[lo]);
  }
  return result;
}

}  // namespace zzlocal
