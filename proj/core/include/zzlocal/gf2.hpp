#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace zzlocal {

/// Dense bit matrix over GF(2), row-major with 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(std::size_t rows, std::size_t cols);
  /// From nested 0/1 rows; all rows must have equal length. Throws InputError.
  static GF2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols = 0);
  static GF2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= bit(c); }
  /// row[dst] ^= row[src]
  void add_row(std::size_t dst, std::size_t src);
  void swap_rows(std::size_t a, std::size_t b);

  std::vector<bool> column(std::size_t c) const;
  std::vector<std::vector<int>> to_rows() const;
  GF2Matrix transpose() const;

  friend GF2Matrix operator*(const GF2Matrix& a, const GF2Matrix& b);
  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static std::uint64_t bit(std::size_t c) { return std::uint64_t{1} << (c % 64); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> data_;
};

std::size_t gf2_rank(GF2Matrix m);

/// Columns form a basis of the null space {x : m x = 0}; shape cols x nullity.
GF2Matrix kernel_basis(const GF2Matrix& m);

/// Some x with a x = b, if one exists.
std::optional<std::vector<bool>> solve(const GF2Matrix& a, const std::vector<bool>& b);

std::optional<GF2Matrix> inverse(const GF2Matrix& m);

/// [a | b]; row counts must agree.
GF2Matrix hstack(const GF2Matrix& a, const GF2Matrix& b);

}  // namespace zzlocal
