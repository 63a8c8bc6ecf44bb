#pragma once

#include <cstddef>
#include <vector>

#include "zzlocal/gf2.hpp"

namespace zzlocal {

enum class ArrowDirection { Forward, Backward };

/// Linear map between consecutive positions. A forward arrow at slot i maps
/// V_i -> V_{i+1} (shape dims[i+1] x dims[i]); a backward arrow maps
/// V_{i+1} -> V_i (shape dims[i] x dims[i+1]).
struct Arrow {
  ArrowDirection direction = ArrowDirection::Forward;
  GF2Matrix matrix;
};

/// Zigzag diagram of finite-dimensional GF(2) vector spaces.
class ZigzagModule {
 public:
  ZigzagModule() = default;
  /// Throws InputError on shape mismatches or arrows.size() != dims.size() - 1.
  ZigzagModule(std::vector<std::size_t> dims, std::vector<Arrow> arrows);

  std::size_t length() const { return dims_.size(); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::vector<ArrowDirection> directions() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Arrow> arrows_;
};

/// Interval summand I[birth, death], 1-based positions, inclusive.
struct IndexInterval {
  std::size_t birth = 1;
  std::size_t death = 1;

  bool contains(std::size_t i) const { return birth <= i && i <= death; }
  friend auto operator<=>(const IndexInterval&, const IndexInterval&) = default;
};

/// Rank of the canonical limit -> colimit map of the module restricted to
/// positions i..j (1-based, inclusive). Equals the number of interval
/// summands containing [i, j].
std::size_t generalized_rank(const ZigzagModule& module, std::size_t i, std::size_t j);

/// Interval summands with multiplicity, sorted.
std::vector<IndexInterval> interval_decomposition(const ZigzagModule& module);

/// Positions i..j (1-based, inclusive), re-indexed from 1.
ZigzagModule restrict_module(const ZigzagModule& module, std::size_t i, std::size_t j);

/// Direct sum of interval modules with the given arrow directions. Basis at
/// each position follows the order of `intervals`.
ZigzagModule direct_sum_of_intervals(const std::vector<ArrowDirection>& directions,
                                     const std::vector<IndexInterval>& intervals);

/// Intervals clipped to [i, j] and shifted so i becomes 1; empty clips dropped.
std::vector<IndexInterval> clip_intervals(const std::vector<IndexInterval>& intervals,
                                          std::size_t i, std::size_t j);

}  // namespace zzlocal
