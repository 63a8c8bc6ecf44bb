#include "zzlocal/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "zzlocal/errors.hpp"
#include "union_find.hpp"

namespace zzlocal {

namespace {

using detail::UnionFind;

bool dim_lex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string describe(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

Simplex normalized(Simplex s) {
  std::sort(s.begin(), s.end());
  if (s.empty()) throw InputError("empty simplex");
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("simplex " + describe(s) + " repeats a vertex");
  }
  return s;
}


}  // namespace

std::vector<Simplex> boundary_faces(const Simplex& s) {
  std::vector<Simplex> faces;
  if (s.size() <= 1) return faces;
  for (std::size_t skip = s.size(); skip-- > 0;) {
    Simplex f;
    f.reserve(s.size() - 1);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k != skip) f.push_back(s[k]);
    }
    faces.push_back(std::move(f));
  }
  return faces;
}

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices) {
  for (auto& s : simplices) s = normalized(std::move(s));
  std::sort(simplices.begin(), simplices.end(), dim_lex_less);
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  simplices_ = std::move(simplices);
  for (const auto& s : simplices_) {
    for (const auto& f : boundary_faces(s)) {
      if (!contains(f)) {
        throw InputError("simplex " + describe(s) + " is missing face " + describe(f));
      }
    }
  }
}

bool SimplicialComplex::contains(const Simplex& s) const {
  return std::binary_search(simplices_.begin(), simplices_.end(), s, dim_lex_less);
}

std::vector<Simplex> SimplicialComplex::of_dim(int p) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (simplex_dim(s) == p) out.push_back(s);
  }
  return out;
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  SimplicialComplex out;
  std::set_union(a.simplices_.begin(), a.simplices_.end(), b.simplices_.begin(),
                 b.simplices_.end(), std::back_inserter(out.simplices_), dim_lex_less);
  return out;
}

FilteredComplex::FilteredComplex(std::vector<FilteredSimplex> simplices) {
  std::map<Simplex, Rational> grade;
  for (auto& s : simplices) {
    s.vertices = normalized(std::move(s.vertices));
    auto [it, inserted] = grade.emplace(s.vertices, s.grade);
    if (!inserted) throw InputError("simplex " + describe(s.vertices) + " listed twice");
  }
  for (const auto& s : simplices) {
    for (const auto& f : boundary_faces(s.vertices)) {
      const auto it = grade.find(f);
      if (it == grade.end()) {
        throw InputError("simplex " + describe(s.vertices) + " is missing face " + describe(f));
      }
      if (s.grade < it->second) {
        throw InputError("face " + describe(f) + " enters after simplex " + describe(s.vertices));
      }
    }
  }
  std::sort(simplices.begin(), simplices.end(),
            [](const FilteredSimplex& a, const FilteredSimplex& b) {
              if (a.grade != b.grade) return a.grade < b.grade;
              return dim_lex_less(a.vertices, b.vertices);
            });
  simplices_ = std::move(simplices);
}

SimplicialComplex FilteredComplex::sublevel(const Rational& t) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.grade <= t) out.push_back(s.vertices);
  }
  return SimplicialComplex(std::move(out));
}

PersistenceDiagram standard_persistence(const FilteredComplex& complex, int p) {
  if (p < 0) throw std::invalid_argument("negative homology degree");
  const auto& cells = complex.simplices();
  std::map<Simplex, std::size_t> index;
  for (std::size_t k = 0; k < cells.size(); ++k) index.emplace(cells[k].vertices, k);

  // Columns hold face indices in ascending order; pivot is the last entry.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::vector<std::size_t>> columns(cells.size());
  std::vector<std::size_t> pivot_owner(cells.size(), kNone);
  std::vector<std::size_t> paired_with(cells.size(), kNone);

  for (std::size_t j = 0; j < cells.size(); ++j) {
    const int d = simplex_dim(cells[j].vertices);
    if (d != p && d != p + 1) continue;
    auto& col = columns[j];
    for (const auto& f : boundary_faces(cells[j].vertices)) col.push_back(index.at(f));
    std::sort(col.begin(), col.end());
    while (!col.empty() && pivot_owner[col.back()] != kNone) {
      const auto& other = columns[pivot_owner[col.back()]];
      std::vector<std::size_t> sum;
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(sum));
      col = std::move(sum);
    }
    if (!col.empty()) {
      pivot_owner[col.back()] = j;
      paired_with[col.back()] = j;
      paired_with[j] = col.back();
    }
  }

  std::vector<DiagramPoint> points;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (simplex_dim(cells[i].vertices) != p || !columns[i].empty()) continue;
    // i is a positive p-simplex (its reduced column is zero).
    if (paired_with[i] == kNone) {
      points.emplace_back(cells[i].grade, ExtReal::infinity(), p);
    } else if (cells[i].grade < cells[paired_with[i]].grade) {
      points.emplace_back(cells[i].grade, cells[paired_with[i]].grade, p);
    }
  }
  return PersistenceDiagram(std::move(points));
}

namespace {

// Basis of H_p(K) together with what is needed to express p-cycles in it.
class HomologyBasis {
 public:
  HomologyBasis(const SimplicialComplex& complex, int p) : p_(p) {
    chains_ = complex.of_dim(p);
    for (std::size_t k = 0; k < chains_.size(); ++k) index_.emplace(chains_[k], k);
    if (p == 0) {
      build_components(complex);
    } else {
      build_cycles(complex);
    }
  }

  std::size_t rank() const { return p_ == 0 ? component_roots_.size() : representatives_.cols(); }

  /// Matrix of the inclusion-induced map H_p(this) -> H_p(target).
  GF2Matrix induced_map(const HomologyBasis& target) const {
    GF2Matrix m(target.rank(), rank());
    if (p_ == 0) {
      for (std::size_t c = 0; c < component_roots_.size(); ++c) {
        m.set(target.component_of(chains_[component_roots_[c]][0]), c, true);
      }
      return m;
    }
    const GF2Matrix system = hstack(target.representatives_, target.boundaries_);
    for (std::size_t c = 0; c < rank(); ++c) {
      std::vector<bool> chain(target.chains_.size(), false);
      for (std::size_t r = 0; r < chains_.size(); ++r) {
        if (representatives_.get(r, c)) chain[target.index_.at(chains_[r])] = true;
      }
      const auto x = solve(system, chain);
      if (!x) throw std::logic_error("inclusion does not map a cycle to a cycle");
      for (std::size_t r = 0; r < target.rank(); ++r) m.set(r, c, (*x)[r]);
    }
    return m;
  }

 private:
  std::size_t component_of(std::size_t vertex) const {
    const std::size_t root = vertex_component_.at(vertex);
    return static_cast<std::size_t>(
        std::find(component_roots_.begin(), component_roots_.end(), root) -
        component_roots_.begin());
  }

  void build_components(const SimplicialComplex& complex) {
    UnionFind uf(chains_.size());
    for (const auto& e : complex.of_dim(1)) uf.unite(index_.at({e[0]}), index_.at({e[1]}));
    for (std::size_t k = 0; k < chains_.size(); ++k) {
      const std::size_t root = uf.find(k);
      if (root == k) component_roots_.push_back(k);
      vertex_component_.emplace(chains_[k][0], root);
    }
  }

  void build_cycles(const SimplicialComplex& complex) {
    const std::vector<Simplex> faces = complex.of_dim(p_ - 1);
    std::map<Simplex, std::size_t> face_index;
    for (std::size_t k = 0; k < faces.size(); ++k) face_index.emplace(faces[k], k);
    GF2Matrix boundary_p(faces.size(), chains_.size());
    for (std::size_t c = 0; c < chains_.size(); ++c) {
      for (const auto& f : boundary_faces(chains_[c])) boundary_p.set(face_index.at(f), c, true);
    }
    const std::vector<Simplex> cofaces = complex.of_dim(p_ + 1);
    boundaries_ = GF2Matrix(chains_.size(), cofaces.size());
    for (std::size_t c = 0; c < cofaces.size(); ++c) {
      for (const auto& f : boundary_faces(cofaces[c])) boundaries_.set(index_.at(f), c, true);
    }
    // Extend a basis of the boundaries to one of the cycles.
    const GF2Matrix cycles = kernel_basis(boundary_p);
    GF2Matrix chosen(chains_.size(), 0);
    std::size_t current = gf2_rank(boundaries_);
    for (std::size_t c = 0; c < cycles.cols(); ++c) {
      GF2Matrix z(chains_.size(), 1);
      for (std::size_t r = 0; r < chains_.size(); ++r) z.set(r, 0, cycles.get(r, c));
      GF2Matrix candidate = hstack(chosen, z);
      const std::size_t next = gf2_rank(hstack(boundaries_, candidate));
      if (next > current) {
        chosen = std::move(candidate);
        current = next;
      }
    }
    representatives_ = std::move(chosen);
  }

  int p_;
  std::vector<Simplex> chains_;
  std::map<Simplex, std::size_t> index_;
  std::vector<std::size_t> component_roots_;
  std::map<std::size_t, std::size_t> vertex_component_;
  GF2Matrix representatives_;
  GF2Matrix boundaries_;
};

}  // namespace

ZigzagModule build_union_zigzag(const std::vector<SimplicialComplex>& snapshots, int p) {
  if (snapshots.empty()) throw InputError("union zigzag needs at least one snapshot");
  if (p < 0) throw std::invalid_argument("negative homology degree");
  std::vector<HomologyBasis> spaces;
  for (std::size_t k = 0; k < snapshots.size(); ++k) {
    if (k > 0) spaces.emplace_back(unite(snapshots[k - 1], snapshots[k]), p);
    spaces.emplace_back(snapshots[k], p);
  }
  std::vector<std::size_t> dims;
  for (const auto& s : spaces) dims.push_back(s.rank());
  std::vector<Arrow> arrows;
  for (std::size_t s = 0; s + 1 < spaces.size(); ++s) {
    if (s % 2 == 0) {
      arrows.push_back({ArrowDirection::Forward, spaces[s].induced_map(spaces[s + 1])});
    } else {
      arrows.push_back({ArrowDirection::Backward, spaces[s + 1].induced_map(spaces[s])});
    }
  }
  return ZigzagModule(std::move(dims), std::move(arrows));
}

}  // namespace zzlocal
