#include "jetcoh/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetcoh {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) acc += a * x[c];
    }
    y[r] = acc;
  }
  return y;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj != 0) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: dimension mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: dimension mismatch");
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  return out;
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const Rational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("SparseRationalMatrix::add");
  if (v == 0) return;
  entries_.push_back({r, c, v});
  finalized_ = false;
}

void SparseRationalMatrix::finalize() {
  if (finalized_) return;
  std::sort(entries_.begin(), entries_.end(), [](const SparseEntry& a, const SparseEntry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<SparseEntry> merged;
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().row == e.row && merged.back().col == e.col) {
      merged.back().value += e.value;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const SparseEntry& e) { return e.value == 0; });
  entries_ = std::move(merged);
  finalized_ = true;
}

RationalMatrix SparseRationalMatrix::to_dense() const {
  RationalMatrix m(rows_, cols_);
  for (const auto& e : entries_) m(e.row, e.col) += e.value;
  return m;
}

SparseRationalMatrix SparseRationalMatrix::from_dense(const RationalMatrix& m) {
  SparseRationalMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.entries_.push_back({r, c, m(r, c)});
  return s;
}

EchelonForm fraction_free_echelon(const RationalMatrix& m) {
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  std::vector<std::vector<BigInt>> a(nr, std::vector<BigInt>(nc));
  for (std::size_t r = 0; r < nr; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < nc; ++c)
      if (m(r, c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < nc; ++c) {
      if (m(r, c) == 0) continue;
      a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
  }

  EchelonForm out;
  out.cols = nc;
  BigInt prev = 1;
  std::size_t top = 0;
  for (std::size_t col = 0; col < nc && top < nr; ++col) {
    std::size_t best = nr;
    std::size_t best_weight = nc + 1;
    for (std::size_t r = top; r < nr; ++r) {
      if (a[r][col] == 0) continue;
      std::size_t weight = 0;
      for (std::size_t c = col; c < nc; ++c) weight += (a[r][c] != 0);
      if (weight < best_weight) {
        best = r;
        best_weight = weight;
      }
    }
    if (best == nr) continue;
    std::swap(a[top], a[best]);
    const BigInt pivot = a[top][col];
    for (std::size_t r = top + 1; r < nr; ++r) {
      const BigInt factor = a[r][col];
      for (std::size_t c = col + 1; c < nc; ++c) {
        BigInt v = pivot * a[r][c];
        if (factor != 0 && a[top][c] != 0) v -= factor * a[top][c];
        if (prev != 1) {
          if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t()))
            throw std::logic_error("fraction-free elimination: inexact division");
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        }
        a[r][c] = std::move(v);
      }
      a[r][col] = 0;
    }
    prev = pivot;
    out.pivot_cols.push_back(col);
    ++top;
  }
  a.resize(top);
  out.rows = std::move(a);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).rank(); }

namespace {

std::vector<Rational> make_primitive(std::vector<Rational> v) {
  BigInt l = common_denominator(v);
  BigInt g = 0;
  for (auto& x : v) {
    x *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  for (auto& x : v) x.canonicalize();
  return v;
}

}  // namespace

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  const EchelonForm ech = fraction_free_echelon(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto c : ech.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(nc);
    x[free] = 1;
    for (std::size_t t = ech.rank(); t-- > 0;) {
      const std::size_t pc = ech.pivot_cols[t];
      Rational acc = 0;
      for (std::size_t c = pc + 1; c < nc; ++c) {
        if (ech.rows[t][c] != 0 && x[c] != 0) acc += Rational(ech.rows[t][c]) * x[c];
      }
      x[pc] = -acc / Rational(ech.rows[t][pc]);
    }
    basis.push_back(make_primitive(std::move(x)));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: singular matrix");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(piv, c), a(col, c));
        std::swap(inv(piv, c), inv(col, c));
      }
    }
    const Rational p = a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) /= p;
      inv(col, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        if (a(col, c) != 0) a(r, c) -= f * a(col, c);
        if (inv(col, c) != 0) inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix b = m;
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && b(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(b(piv, c), b(col, c));
      d = -d;
    }
    d *= b(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (b(r, col) == 0) continue;
      const Rational f = b(r, col) / b(col, col);
      for (std::size_t c = col; c < n; ++c) b(r, c) -= f * b(col, c);
    }
  }
  return d;
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leading_principal_minors: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  std::vector<Rational> minors;
  Rational det = 1;
  std::size_t k = 0;
  // Elimination without pivoting: the k-th pivot is minor_k / minor_{k-1}.
  for (; k < n && a(k, k) != 0; ++k) {
    det *= a(k, k);
    minors.push_back(det);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a(r, k) == 0) continue;
      const Rational f = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  for (; k < n; ++k) {
    RationalMatrix sub(k + 1, k + 1);
    for (std::size_t r = 0; r <= k; ++r)
      for (std::size_t c = 0; c <= k; ++c) sub(r, c) = m(r, c);
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool is_positive_definite(const RationalMatrix& m) {
  if (m.rows() != m.cols() || !(m == m.transpose())) return false;
  for (const auto& d : leading_principal_minors(m))
    if (d <= 0) return false;
  return true;
}

}  // namespace jetcoh
