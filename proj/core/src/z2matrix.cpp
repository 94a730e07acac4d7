#include "homcoord/z2matrix.hpp"

#include <algorithm>
#include <string>

#include "homcoord/errors.hpp"

namespace homcoord {

namespace {

std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

// Mutable working copy used by the elimination routines. Rows are contiguous;
// all invariants of Z2Matrix (zero padding) are maintained.
struct Work {
  std::size_t rows = 0, cols = 0, stride = 0;
  std::vector<std::uint64_t> w;

  explicit Work(const Z2Matrix& m)
      : rows(m.rows()), cols(m.cols()), stride(m.words_per_row()) {
    w.reserve(rows * stride);
    for (std::size_t r = 0; r < rows; ++r) {
      auto rw = m.row_words(r);
      w.insert(w.end(), rw.begin(), rw.end());
    }
  }

  std::uint64_t* row(std::size_t r) { return w.data() + r * stride; }
  const std::uint64_t* row(std::size_t r) const { return w.data() + r * stride; }

  bool test(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row(a), row(a) + stride, row(b));
  }

  // dst ^= src, starting at word w0. Safe whenever src has no set bits below
  // word w0 (holds for pivot rows once all earlier columns are processed).
  void xor_row_tail(std::size_t dst, std::size_t src, std::size_t w0) {
    std::uint64_t* d = row(dst) + w0;
    const std::uint64_t* s = row(src) + w0;
    for (std::size_t i = 0, n = stride - w0; i < n; ++i) d[i] ^= s[i];
  }

  // Row operations preserve the zero-padding invariant, so the words can be
  // adopted directly.
  Z2Matrix take() {
    Z2MatrixBuilder b(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) b.set_row_words(r, {row(r), stride});
    return std::move(b).build();
  }
};

}  // namespace

Z2Matrix Z2Matrix::zero(std::size_t rows, std::size_t cols) {
  Z2Matrix m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.stride_ = words_for(cols);
  m.words_.assign(rows * m.stride_, 0);
  return m;
}

Z2Matrix Z2Matrix::identity(std::size_t n) {
  Z2MatrixBuilder b(n, n);
  for (std::size_t i = 0; i < n; ++i) b.set(i, i);
  return std::move(b).build();
}

Z2Matrix Z2Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  const std::size_t m = rows.size();
  const std::size_t n = m == 0 ? 0 : rows.begin()->size();
  Z2MatrixBuilder b(m, n);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != n) throw Error("from_rows: ragged row lengths");
    std::size_t c = 0;
    for (int v : row) b.set(r, c++, v != 0);
    ++r;
  }
  return std::move(b).build();
}

Bitset Z2Matrix::row(std::size_t r) const {
  Bitset out(cols_);
  auto src = row_words(r);
  std::copy(src.begin(), src.end(), out.words().begin());
  return out;
}

Bitset Z2Matrix::column(std::size_t c) const {
  Bitset out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (at(r, c)) out.set(r);
  return out;
}

Z2MatrixBuilder::Z2MatrixBuilder(std::size_t rows, std::size_t cols) {
  m_ = Z2Matrix::zero(rows, cols);
}

Z2MatrixBuilder::Z2MatrixBuilder(const Z2Matrix& m) { m_ = m; }

void Z2MatrixBuilder::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  std::uint64_t& word = m_.words_[r * m_.stride_ + (c >> 6)];
  if (v)
    word |= mask;
  else
    word &= ~mask;
}

void Z2MatrixBuilder::set_column(std::size_t c, const Bitset& bits) {
  for (std::size_t r = 0; r < m_.rows_; ++r) set(r, c, false);
  bits.for_each_set([&](std::size_t r) { set(r, c, true); });
}

void Z2MatrixBuilder::set_row_words(std::size_t r, std::span<const std::uint64_t> words) {
  std::uint64_t* dst = m_.words_.data() + r * m_.stride_;
  std::copy(words.begin(), words.end(), dst);
  if (const std::size_t rem = m_.cols_ & 63; rem != 0 && m_.stride_ > 0)
    dst[m_.stride_ - 1] &= (std::uint64_t{1} << rem) - 1;
}

Z2Matrix Z2MatrixBuilder::build() && { return std::move(m_); }

Elimination eliminate(const Z2Matrix& a) {
  Work wk(a);
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // rows 0..pr-1 hold the pivots found so far
  for (std::size_t c = 0; c < wk.cols && pr < wk.rows; ++c) {
    std::size_t r = pr;
    while (r < wk.rows && !wk.test(r, c)) ++r;
    if (r == wk.rows) continue;
    wk.swap_rows(pr, r);
    const std::size_t w0 = c >> 6;
    for (std::size_t i = 0; i < wk.rows; ++i)
      if (i != pr && wk.test(i, c)) wk.xor_row_tail(i, pr, w0);
    pivots.push_back(c);
    ++pr;
  }
  return {wk.take(), std::move(pivots)};
}

Z2Matrix mat_mul(const Z2Matrix& a, const Z2Matrix& b) {
  if (a.cols() != b.rows())
    throw Error("mat_mul: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                std::to_string(b.cols()) + ")");
  Z2Matrix out = Z2Matrix::zero(a.rows(), b.cols());
  const std::size_t stride = out.words_per_row();
  // out.row(i) = XOR of b.row(k) over set bits k of a.row(i)
  std::vector<std::uint64_t> acc(stride);
  Z2MatrixBuilder builder(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    auto arow = a.row_words(i);
    for (std::size_t wi = 0; wi < arow.size(); ++wi) {
      std::uint64_t word = arow[wi];
      while (word) {
        const std::size_t k = (wi << 6) + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        auto brow = b.row_words(k);
        for (std::size_t j = 0; j < stride; ++j) acc[j] ^= brow[j];
      }
    }
    for (std::size_t c = 0; c < b.cols(); ++c)
      if ((acc[c >> 6] >> (c & 63)) & 1u) builder.set(i, c);
  }
  return std::move(builder).build();
}

Z2Matrix inverse(const Z2Matrix& a) {
  if (a.rows() != a.cols()) throw Error("inverse: matrix is not square");
  const std::size_t n = a.rows();
  Elimination e = eliminate(hconcat(a, Z2Matrix::identity(n)));
  // Full rank iff the first n columns all carry pivots.
  if (e.pivot_columns.size() != n || (n > 0 && e.pivot_columns.back() >= n))
    throw Error("inverse: singular matrix (rank " +
                std::to_string(rank(a)) + " of " + std::to_string(n) + ")");
  Z2MatrixBuilder b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (e.reduced.at(r, n + c)) b.set(r, c);
  return std::move(b).build();
}

std::vector<std::size_t> earliest_basis(const Z2Matrix& a) {
  return eliminate(a).pivot_columns;
}

CoordinateDecomposition coordinate_decomposition(const Z2Matrix& a) {
  Elimination e = eliminate(a);
  CoordinateDecomposition d;
  d.basis_indices = e.pivot_columns;
  d.rank = e.pivot_columns.size();

  std::vector<char> is_basis(a.cols(), 0);
  for (std::size_t c : d.basis_indices) is_basis[c] = 1;
  d.permutation = d.basis_indices;
  d.permutation.reserve(a.cols());
  std::vector<std::size_t> non_basis;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_basis[c]) {
      d.permutation.push_back(c);
      non_basis.push_back(c);
    }

  // After Gauss-Jordan, row i of the reduced matrix expresses each non-basis
  // column in terms of basis column i.
  Z2MatrixBuilder rb(d.rank, non_basis.size());
  for (std::size_t j = 0; j < non_basis.size(); ++j)
    for (std::size_t i = 0; i < d.rank; ++i)
      if (e.reduced.at(i, non_basis[j])) rb.set(i, j);
  d.remainder = std::move(rb).build();
  return d;
}

Z2Matrix express_in_basis(const Z2Matrix& basis, const Z2Matrix& targets) {
  if (basis.rows() != targets.rows())
    throw Error("express_in_basis: row count mismatch");
  Elimination e = eliminate(hconcat(basis, targets));
  const std::size_t nb = basis.cols();
  for (std::size_t c : e.pivot_columns)
    if (c >= nb)
      throw Error("express_in_basis: target column " + std::to_string(c - nb) +
                  " is outside the span of the basis");
  if (e.pivot_columns.size() != nb)
    throw Error("express_in_basis: basis does not have full column rank (rank " +
                std::to_string(e.pivot_columns.size()) + " of " + std::to_string(nb) + ")");
  // Pivot i sits at row i and corresponds to basis column i, so the solution
  // block is just rows 0..nb-1 of the target region.
  Z2MatrixBuilder xb(nb, targets.cols());
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j)
      if (e.reduced.at(i, nb + j)) xb.set(i, j);
  return std::move(xb).build();
}

std::size_t rank(const Z2Matrix& a) { return eliminate(a).pivot_columns.size(); }

bool in_column_space(const Z2Matrix& a, const Bitset& v) {
  if (v.size() != a.rows()) throw Error("in_column_space: vector length mismatch");
  Z2Matrix vm = from_columns(a.rows(), std::span<const Bitset>(&v, 1));
  Elimination e = eliminate(hconcat(a, vm));
  return e.pivot_columns.empty() || e.pivot_columns.back() < a.cols();
}

Z2Matrix transpose(const Z2Matrix& a) {
  Z2MatrixBuilder b(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto rw = a.row_words(r);
    for (std::size_t wi = 0; wi < rw.size(); ++wi) {
      std::uint64_t word = rw[wi];
      while (word) {
        const std::size_t c = (wi << 6) + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        b.set(c, r);
      }
    }
  }
  return std::move(b).build();
}

Z2Matrix hconcat(const Z2Matrix& a, const Z2Matrix& b) {
  if (a.rows() != b.rows()) throw Error("hconcat: row count mismatch");
  const std::size_t cols = a.cols() + b.cols();
  const std::size_t stride = (cols + 63) / 64;
  Z2MatrixBuilder out(a.rows(), cols);
  const std::size_t off = a.cols() & 63;   // bit offset of b inside its first word
  const std::size_t base = a.cols() >> 6;  // word index where b starts
  std::vector<std::uint64_t> row(stride);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(row.begin(), row.end(), 0);
    auto aw = a.row_words(r);
    std::copy(aw.begin(), aw.end(), row.begin());
    auto bw = b.row_words(r);
    for (std::size_t i = 0; i < bw.size(); ++i) {
      const std::uint64_t w = bw[i];
      if (off == 0) {
        row[base + i] |= w;
      } else {
        row[base + i] |= w << off;
        if (base + i + 1 < stride) row[base + i + 1] |= w >> (64 - off);
      }
    }
    out.set_row_words(r, row);
  }
  return std::move(out).build();
}

Z2Matrix select_columns(const Z2Matrix& a, std::span<const std::size_t> indices) {
  Z2MatrixBuilder b(a.rows(), indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j)
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a.at(r, indices[j])) b.set(r, j);
  return std::move(b).build();
}

Z2Matrix from_columns(std::size_t rows, std::span<const Bitset> columns) {
  Z2MatrixBuilder b(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error("from_columns: column length mismatch");
    columns[j].for_each_set([&](std::size_t r) { b.set(r, j); });
  }
  return std::move(b).build();
}

}  // namespace homcoord
