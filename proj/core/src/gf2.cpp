#include "zzlocal/gf2.hpp"

#include <stdexcept>
#include <utility>

#include "zzlocal/errors.hpp"

namespace zzlocal {

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

GF2Matrix GF2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  GF2Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged GF(2) matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const int v = rows[r][c];
      if (v != 0 && v != 1) throw InputError("GF(2) matrix entries must be 0 or 1");
      m.set(r, c, v == 1);
    }
  }
  return m;
}

GF2Matrix GF2Matrix::identity(std::size_t n) {
  GF2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void GF2Matrix::set(std::size_t r, std::size_t c, bool value) {
  auto& w = data_[r * words_ + c / 64];
  if (value) {
    w |= bit(c);
  } else {
    w &= ~bit(c);
  }
}

void GF2Matrix::add_row(std::size_t dst, std::size_t src) {
  for (std::size_t k = 0; k < words_; ++k) data_[dst * words_ + k] ^= data_[src * words_ + k];
}

void GF2Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t k = 0; k < words_; ++k) std::swap(data_[a * words_ + k], data_[b * words_ + k]);
}

std::vector<bool> GF2Matrix::column(std::size_t c) const {
  std::vector<bool> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = get(r, c);
  return out;
}

std::vector<std::vector<int>> GF2Matrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r][c] = get(r, c) ? 1 : 0;
  }
  return out;
}

GF2Matrix GF2Matrix::transpose() const {
  GF2Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GF2Matrix: shape mismatch in product");
  GF2Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a.get(r, k)) continue;
      for (std::size_t w = 0; w < out.words_; ++w) {
        out.data_[r * out.words_ + w] ^= b.data_[k * b.words_ + w];
      }
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot column per pivot row,
// considering only the first `ncols` columns.
std::vector<std::size_t> rref(GF2Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(row, p);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != row && m.get(r, c)) m.add_row(r, row);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t gf2_rank(GF2Matrix m) { return rref(m, m.cols()).size(); }

GF2Matrix kernel_basis(const GF2Matrix& m) {
  GF2Matrix work = m;
  const std::vector<std::size_t> pivots = rref(work, work.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  GF2Matrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, true);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (work.get(i, free)) basis.set(pivots[i], k, true);
    }
    ++k;
  }
  return basis;
}

std::optional<std::vector<bool>> solve(const GF2Matrix& a, const std::vector<bool>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  GF2Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
    aug.set(r, a.cols(), b[r]);
  }
  const std::vector<std::size_t> pivots = rref(aug, a.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug.get(r, a.cols())) return std::nullopt;
  }
  std::vector<bool> x(a.cols(), false);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.get(i, a.cols());
  return x;
}

std::optional<GF2Matrix> inverse(const GF2Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  GF2Matrix aug = hstack(m, GF2Matrix::identity(n));
  if (rref(aug, n).size() != n) return std::nullopt;
  GF2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
  }
  return inv;
}

GF2Matrix hstack(const GF2Matrix& a, const GF2Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
  GF2Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) out.set(r, c, true);
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (b.get(r, c)) out.set(r, a.cols() + c, true);
    }
  }
  return out;
}

}  // namespace zzlocal
