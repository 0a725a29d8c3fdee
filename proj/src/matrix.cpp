#include "apolar/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace apolar {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns,
                                            std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

EchelonForm reduced_echelon(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));

    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;

    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || is_zero(m(i, c))) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= factor * m(pivot_row, k);
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).pivots.size(); }

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ef.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivots.size(); ++i) v[ef.pivots[i]] = -ef.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve_membership(const RationalVector& v,
                                               std::span<const RationalVector> basis) {
  const std::size_t n = v.size();
  for (const auto& b : basis)
    if (b.size() != n) throw std::invalid_argument("solve_membership: dimension mismatch");

  // Augmented system [b_0 ... b_k | v].
  RationalMatrix aug(n, basis.size() + 1);
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) aug(r, c) = basis[c][r];
  for (std::size_t r = 0; r < n; ++r) aug(r, basis.size()) = v[r];

  const EchelonForm ef = reduced_echelon(std::move(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == basis.size()) return std::nullopt;

  RationalVector coeffs(basis.size());
  for (std::size_t i = 0; i < ef.pivots.size(); ++i)
    coeffs[ef.pivots[i]] = ef.reduced(i, basis.size());
  return coeffs;
}

std::size_t span_dim(std::span<const RationalVector> basis, std::size_t length) {
  return rank(RationalMatrix::from_columns(basis, length));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && is_zero(m(r, c))) ++r;
    if (r == n) return 0;
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const Rational factor = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
    }
  }
  return det;
}

bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

}  // namespace apolar
