#pragma once

#include "jetcoh/rational.hpp"

#include <cstddef>
#include <vector>

namespace jetcoh {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const RationalMatrix& other) const;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, const RationalMatrix& a);

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  Rational value;
};

/// Coordinate-format sparse matrix; entries sorted by (row, col), no explicit zeros.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix() = default;
  SparseRationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Accumulates into (r, c); call finalize() before reading entries.
  void add(std::size_t r, std::size_t c, const Rational& v);
  void finalize();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }

  RationalMatrix to_dense() const;
  static SparseRationalMatrix from_dense(const RationalMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseEntry> entries_;
  bool finalized_ = true;
};

/// Row echelon form computed by fraction-free (Bareiss) elimination over the
/// integers after clearing row denominators. Pivot rows are chosen by fewest
/// nonzeros among the candidates of each column.
struct EchelonForm {
  std::vector<std::vector<BigInt>> rows;  // one per pivot, full width
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;
  std::size_t rank() const { return pivot_cols.size(); }
};

EchelonForm fraction_free_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of the right kernel {x : m x = 0}; each vector is scaled to be a
/// primitive integer vector.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

/// Throws std::domain_error when the matrix is singular.
RationalMatrix inverse(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Leading principal minors det(m[0..k, 0..k]) for k = 0..n-1.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

bool is_positive_definite(const RationalMatrix& m);

}  // namespace jetcoh
