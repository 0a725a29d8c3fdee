#pragma once

#include "apolar/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace apolar {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q. Every linear map in the library
/// (catalecticants, transpose multiplication, D_l) is materialized as one.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; all columns must share a length.
  static RationalMatrix from_columns(std::span<const RationalVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalVector column(std::size_t c) const;
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  RationalMatrix transposed() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm reduced_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel. One vector per free column (in increasing
/// column order) with a 1 in that column, 0 in the other free columns.
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);

/// Coefficients c with sum c_i basis[i] = v, or nullopt when v lies outside
/// the span. For a dependent basis the free coefficients are set to zero.
/// Throws std::invalid_argument if lengths disagree.
std::optional<RationalVector> solve_membership(const RationalVector& v,
                                               std::span<const RationalVector> basis);

/// Dimension of span(basis).
std::size_t span_dim(std::span<const RationalVector> basis, std::size_t length);

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, const RationalVector& v);

Rational determinant(RationalMatrix m);

bool is_zero_vector(std::span<const Rational> v);

}  // namespace apolar
