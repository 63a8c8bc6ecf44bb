#include "zzlocal/zigzag.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zzlocal/errors.hpp"

namespace zzlocal {

ZigzagModule::ZigzagModule(std::vector<std::size_t> dims, std::vector<Arrow> arrows)
    : dims_(std::move(dims)), arrows_(std::move(arrows)) {
  if (dims_.empty()) throw InputError("zigzag module needs at least one position");
  if (arrows_.size() + 1 != dims_.size()) {
    throw InputError("zigzag module with " + std::to_string(dims_.size()) + " positions needs " +
                     std::to_string(dims_.size() - 1) + " arrows");
  }
  for (std::size_t s = 0; s < arrows_.size(); ++s) {
    const auto& a = arrows_[s];
    const bool fwd = a.direction == ArrowDirection::Forward;
    const std::size_t rows = fwd ? dims_[s + 1] : dims_[s];
    const std::size_t cols = fwd ? dims_[s] : dims_[s + 1];
    if (a.matrix.rows() != rows || a.matrix.cols() != cols) {
      throw InputError("arrow " + std::to_string(s + 1) + " has shape " +
                       std::to_string(a.matrix.rows()) + "x" + std::to_string(a.matrix.cols()) +
                       ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
}

std::vector<ArrowDirection> ZigzagModule::directions() const {
  std::vector<ArrowDirection> out;
  out.reserve(arrows_.size());
  for (const auto& a : arrows_) out.push_back(a.direction);
  return out;
}

namespace {

void check_range(const ZigzagModule& module, std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > module.length()) {
    throw std::out_of_range("index range [" + std::to_string(i) + ", " + std::to_string(j) +
                            "] outside module of length " + std::to_string(module.length()));
  }
}

void place(GF2Matrix& target, const GF2Matrix& block, std::size_t row0, std::size_t col0) {
  for (std::size_t r = 0; r < block.rows(); ++r) {
    for (std::size_t c = 0; c < block.cols(); ++c) {
      if (block.get(r, c)) target.flip(row0 + r, col0 + c);
    }
  }
}

void place_identity(GF2Matrix& target, std::size_t n, std::size_t row0, std::size_t col0) {
  for (std::size_t k = 0; k < n; ++k) target.flip(row0 + k, col0 + k);
}

}  // namespace

std::size_t generalized_rank(const ZigzagModule& module, std::size_t i, std::size_t j) {
  check_range(module, i, j);
  const auto& dims = module.dims();
  const std::size_t a = i - 1;
  const std::size_t b = j - 1;

  std::vector<std::size_t> offset(b - a + 2, 0);
  for (std::size_t k = a; k <= b; ++k) {
    if (dims[k] == 0) return 0;
    offset[k - a + 1] = offset[k - a] + dims[k];
  }
  const std::size_t total = offset.back();

  // Limit: tuples (v_a..v_b) with every arrow relation satisfied, i.e. the
  // kernel of `constraints`. Colimit: the cokernel of `relations`.
  std::size_t constraint_rows = 0;
  std::size_t relation_cols = 0;
  for (std::size_t s = a; s < b; ++s) {
    const bool fwd = module.arrows()[s].direction == ArrowDirection::Forward;
    constraint_rows += fwd ? dims[s + 1] : dims[s];
    relation_cols += fwd ? dims[s] : dims[s + 1];
  }
  GF2Matrix constraints(constraint_rows, total);
  GF2Matrix relations(total, relation_cols);
  std::size_t row = 0;
  std::size_t col = 0;
  for (std::size_t s = a; s < b; ++s) {
    const Arrow& arrow = module.arrows()[s];
    const std::size_t here = offset[s - a];
    const std::size_t next = offset[s - a + 1];
    if (arrow.direction == ArrowDirection::Forward) {
      // f v_s = v_{s+1};  relation iota_s x ~ iota_{s+1} f x
      place(constraints, arrow.matrix, row, here);
      place_identity(constraints, dims[s + 1], row, next);
      place_identity(relations, dims[s], here, col);
      place(relations, arrow.matrix, next, col);
      row += dims[s + 1];
      col += dims[s];
    } else {
      // g v_{s+1} = v_s;  relation iota_{s+1} y ~ iota_s g y
      place(constraints, arrow.matrix, row, next);
      place_identity(constraints, dims[s], row, here);
      place_identity(relations, dims[s + 1], next, col);
      place(relations, arrow.matrix, here, col);
      row += dims[s];
      col += dims[s + 1];
    }
  }

  const GF2Matrix limit = kernel_basis(constraints);
  if (limit.cols() == 0) return 0;
  // Any component of a compatible tuple represents the same colimit class;
  // use the first one.
  GF2Matrix image(total, limit.cols());
  for (std::size_t r = 0; r < dims[a]; ++r) {
    for (std::size_t c = 0; c < limit.cols(); ++c) image.set(r, c, limit.get(r, c));
  }
  const std::size_t base = gf2_rank(relations);
  return gf2_rank(hstack(relations, image)) - base;
}

std::vector<IndexInterval> interval_decomposition(const ZigzagModule& module) {
  const std::size_t n = module.length();
  // rank[i][j] for 1 <= i <= j <= n, zero outside.
  std::vector<std::vector<std::size_t>> rank(n + 2, std::vector<std::size_t>(n + 2, 0));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (module.dims()[j - 1] == 0) break;
      rank[i][j] = generalized_rank(module, i, j);
      if (rank[i][j] == 0) break;
    }
  }
  std::vector<IndexInterval> out;
  for (std::size_t b = 1; b <= n; ++b) {
    for (std::size_t d = b; d <= n; ++d) {
      const long m = static_cast<long>(rank[b][d]) - static_cast<long>(rank[b - 1][d]) -
                     static_cast<long>(rank[b][d + 1]) + static_cast<long>(rank[b - 1][d + 1]);
      if (m < 0) throw std::logic_error("negative interval multiplicity");
      for (long k = 0; k < m; ++k) out.push_back({b, d});
    }
  }
  return out;
}

ZigzagModule restrict_module(const ZigzagModule& module, std::size_t i, std::size_t j) {
  check_range(module, i, j);
  std::vector<std::size_t> dims(module.dims().begin() + static_cast<long>(i - 1),
                                module.dims().begin() + static_cast<long>(j));
  std::vector<Arrow> arrows(module.arrows().begin() + static_cast<long>(i - 1),
                            module.arrows().begin() + static_cast<long>(j - 1));
  return ZigzagModule(std::move(dims), std::move(arrows));
}

ZigzagModule direct_sum_of_intervals(const std::vector<ArrowDirection>& directions,
                                     const std::vector<IndexInterval>& intervals) {
  const std::size_t n = directions.size() + 1;
  std::vector<std::vector<std::size_t>> basis(n);  // interval ids per position
  for (std::size_t id = 0; id < intervals.size(); ++id) {
    const auto& iv = intervals[id];
    if (iv.birth < 1 || iv.birth > iv.death || iv.death > n) {
      throw InputError("interval outside module positions");
    }
    for (std::size_t k = iv.birth; k <= iv.death; ++k) basis[k - 1].push_back(id);
  }
  std::vector<std::size_t> dims(n);
  for (std::size_t k = 0; k < n; ++k) dims[k] = basis[k].size();

  std::vector<Arrow> arrows;
  for (std::size_t s = 0; s + 1 < n; ++s) {
    const bool fwd = directions[s] == ArrowDirection::Forward;
    const auto& src = fwd ? basis[s] : basis[s + 1];
    const auto& dst = fwd ? basis[s + 1] : basis[s];
    GF2Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto it = std::find(dst.begin(), dst.end(), src[c]);
      if (it != dst.end()) m.set(static_cast<std::size_t>(it - dst.begin()), c, true);
    }
    arrows.push_back({directions[s], std::move(m)});
  }
  return ZigzagModule(std::move(dims), std::move(arrows));
}

std::vector<IndexInterval> clip_intervals(const std::vector<IndexInterval>& intervals,
                                          std::size_t i, std::size_t j) {
  std::vector<IndexInterval> out;
  for (const auto& iv : intervals) {
    const std::size_t lo = std::max(iv.birth, i);
    const std::size_t hi = std::min(iv.death, j);
    if (lo <= hi) out.push_back({lo - i + 1, hi - i + 1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zzlocal
