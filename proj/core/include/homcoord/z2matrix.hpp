#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "homcoord/bitset.hpp"

namespace homcoord {

class Z2MatrixBuilder;

/// Dense matrix over Z2 with row-major bit-packed storage.
///
/// Each row occupies words_per_row() 64-bit words; padding bits beyond cols()
/// are always zero. A 0xn or mx0 matrix is valid. Instances are immutable once
/// built (use Z2MatrixBuilder to construct) and therefore safe to share across
/// threads; every operation below is a pure function of its inputs.
class Z2Matrix {
 public:
  Z2Matrix() = default;

  static Z2Matrix zero(std::size_t rows, std::size_t cols);
  static Z2Matrix identity(std::size_t n);
  /// Row-major literal, e.g. Z2Matrix::from_rows({{1, 0}, {1, 1}}).
  static Z2Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t words_per_row() const { return stride_; }

  bool at(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
  }

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }

  Bitset row(std::size_t r) const;
  Bitset column(std::size_t c) const;

  bool operator==(const Z2Matrix&) const = default;

 private:
  friend class Z2MatrixBuilder;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Mutable staging area for constructing a Z2Matrix.
class Z2MatrixBuilder {
 public:
  Z2MatrixBuilder(std::size_t rows, std::size_t cols);
  explicit Z2MatrixBuilder(const Z2Matrix& m);

  std::size_t rows() const { return m_.rows_; }
  std::size_t cols() const { return m_.cols_; }

  void set(std::size_t r, std::size_t c, bool v = true);
  bool at(std::size_t r, std::size_t c) const { return m_.at(r, c); }
  /// Copies `bits` (length rows()) into column c.
  void set_column(std::size_t c, const Bitset& bits);
  /// Replaces row r wholesale; bits beyond cols() are masked off.
  void set_row_words(std::size_t r, std::span<const std::uint64_t> words);

  Z2Matrix build() &&;

 private:
  Z2Matrix m_;
};

/// Result of a full Gauss-Jordan elimination. `pivot_columns` lists, in
/// increasing order, the columns where a pivot was placed; this is exactly the
/// column rank profile, i.e. the earliest basis of the input.
struct Elimination {
  Z2Matrix reduced;
  std::vector<std::size_t> pivot_columns;
};

Elimination eliminate(const Z2Matrix& a);

/// The earliest-basis decomposition A P = B [I_r | R]: `permutation` lists the
/// basis columns first (in increasing order) and the remaining columns after,
/// so column j of A P is column permutation[j] of A. Column j of `remainder`
/// holds the coordinates of the j-th non-basis column in the basis columns.
struct CoordinateDecomposition {
  std::vector<std::size_t> basis_indices;
  std::vector<std::size_t> permutation;
  Z2Matrix remainder;
  std::size_t rank = 0;
};

/// Exact product over Z2; throws Error on inner-dimension mismatch.
Z2Matrix mat_mul(const Z2Matrix& a, const Z2Matrix& b);

/// Inverse of a square matrix; throws Error when the matrix is singular
/// (the message reports the achieved rank).
Z2Matrix inverse(const Z2Matrix& a);

/// Lexicographically earliest maximal independent column set: a column is
/// included iff it is not spanned by strictly earlier columns.
std::vector<std::size_t> earliest_basis(const Z2Matrix& a);

CoordinateDecomposition coordinate_decomposition(const Z2Matrix& a);

/// Solves basis * X = targets for X. Requires basis to have full column rank
/// and every target column to lie in its span; otherwise throws Error
/// identifying the first offending column.
Z2Matrix express_in_basis(const Z2Matrix& basis, const Z2Matrix& targets);

std::size_t rank(const Z2Matrix& a);

/// True iff v (length a.rows()) lies in the span of the columns of a.
bool in_column_space(const Z2Matrix& a, const Bitset& v);

Z2Matrix transpose(const Z2Matrix& a);
Z2Matrix hconcat(const Z2Matrix& a, const Z2Matrix& b);
Z2Matrix select_columns(const Z2Matrix& a, std::span<const std::size_t> indices);
Z2Matrix from_columns(std::size_t rows, std::span<const Bitset> columns);

}  // namespace homcoord
