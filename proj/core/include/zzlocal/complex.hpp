#pragma once

#include <cstddef>
#include <vector>

#include "zzlocal/diagram.hpp"
#include "zzlocal/rational.hpp"
#include "zzlocal/zigzag.hpp"

namespace zzlocal {

/// Sorted vertex ids.
using Simplex = std::vector<std::size_t>;

inline int simplex_dim(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Codimension-one faces, in lexicographic order.
std::vector<Simplex> boundary_faces(const Simplex& s);

/// Finite abstract simplicial complex, closed under faces.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Sorts vertex lists and removes duplicates. Throws InputError if a face
  /// of some simplex is missing or a simplex is empty / repeats a vertex.
  explicit SimplicialComplex(std::vector<Simplex> simplices);

  /// Ordered by dimension, then lexicographically.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  bool contains(const Simplex& s) const;
  std::vector<Simplex> of_dim(int p) const;
  std::size_t size() const { return simplices_.size(); }

  friend SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Simplex> simplices_;
};

struct FilteredSimplex {
  Simplex vertices;
  Rational grade;
};

/// Simplicial complex with a monotone entry grade per simplex.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  /// Throws InputError unless closed under faces with face grade <= coface grade.
  explicit FilteredComplex(std::vector<FilteredSimplex> simplices);

  /// Filtration order: grade, then dimension, then lexicographic.
  const std::vector<FilteredSimplex>& simplices() const { return simplices_; }
  /// Simplices with grade <= t.
  SimplicialComplex sublevel(const Rational& t) const;

 private:
  std::vector<FilteredSimplex> simplices_;
};

/// Degree-p persistence of a filtration by GF(2) column reduction. Pairs of
/// equal grade are dropped; unpaired classes die at infinity. All points
/// carry dim label p.
PersistenceDiagram standard_persistence(const FilteredComplex& complex, int p);

/// H_p of X_1 -> X_1 u X_2 <- X_2 -> ... <- X_n with inclusion-induced maps.
/// Throws InputError on an empty snapshot list.
ZigzagModule build_union_zigzag(const std::vector<SimplicialComplex>& snapshots, int p);

}  // namespace zzlocal
