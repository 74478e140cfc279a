#pragma once

/*
 * Dense matrices over Scalar with exact Gaussian elimination.
 *
 * Elimination processes columns left to right and picks, inside each
 * column, a pivot of minimal complexity (num degree + den degree); that
 * keeps the rational-function entries from blowing up on the structured
 * matrices this library produces.  rank / nullspace / inverse / solve are
 * all read off the reduced form.  commutant_dimension prunes unknowns
 * with the diagonal generators before solving, which turns the seminormal
 * simplicity checks into systems of size O(dim).
 */

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "hecke/error.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero()) {
    require(rows >= 0 && cols >= 0, errc::invalid_argument, "negative matrix dimension");
  }

  static Matrix identity(long n) {
    Matrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
    return m;
  }
  static Matrix diagonal(const std::vector<Scalar>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Scalar& at(long i, long j) { return a_[i * cols_ + j]; }
  const Scalar& at(long i, long j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_diagonal() const {
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::shape_mismatch, "matrix addition shape");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] + b.a_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, errc::shape_mismatch, "matrix subtraction shape");
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = a.a_[i] - b.a_[i];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, errc::shape_mismatch, "matrix product shape");
    Matrix c(a.rows_, b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (long j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }
  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] = s * a.a_[i];
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
      for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Matrix pow(long e) const {
    require(rows_ == cols_, errc::shape_mismatch, "power of a non-square matrix");
    if (e < 0) return inverse().pow(-e);
    Matrix acc = identity(rows_), base = *this;
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  friend Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (long i = 0; i < a.rows_; ++i)
      for (long j = 0; j < a.cols_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (long k = 0; k < b.rows_; ++k)
          for (long l = 0; l < b.cols_; ++l)
            c.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
      }
    return c;
  }

  struct Reduced;

  Reduced reduced_row_echelon() const;
  long rank() const;
  // Basis of { x : A x = 0 }, one vector per free column.
  std::vector<std::vector<Scalar>> nullspace() const;
  Matrix inverse() const;
  // Unique solution of A X = B when A has full column rank; nullopt when
  // the system is inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;
  // Indices of a column basis of the image (pivot columns of the RREF).
  std::vector<long> column_basis() const;

 private:
  long rows_, cols_;
  std::vector<Scalar> a_;
};

struct Matrix::Reduced {
  Matrix m;
  std::vector<long> pivot_cols;        // column of each pivot row, in order
  std::vector<long> pivot_row_of_col;  // -1 for free columns
  long rank = 0;
};

inline Matrix::Reduced Matrix::reduced_row_echelon() const {
  Reduced r;
  r.m = *this;
  r.pivot_row_of_col.assign(cols_, -1);
  long pr = 0;
  for (long col = 0; col < cols_ && pr < rows_; ++col) {
    long best = -1;
    long best_cx = 0;
    for (long i = pr; i < rows_; ++i) {
      const Scalar& v = r.m.at(i, col);
      if (v.is_zero()) continue;
      long cx = v.complexity();
      if (best < 0 || cx < best_cx) {
        best = i;
        best_cx = cx;
      }
    }
    if (best < 0) continue;
    if (best != pr)
      for (long j = 0; j < cols_; ++j) std::swap(r.m.at(best, j), r.m.at(pr, j));
    Scalar inv = r.m.at(pr, col).inverse();
    for (long j = col; j < cols_; ++j)
      if (!r.m.at(pr, j).is_zero()) r.m.at(pr, j) *= inv;
    for (long i = 0; i < rows_; ++i) {
      if (i == pr) continue;
      const Scalar f = r.m.at(i, col);
      if (f.is_zero()) continue;
      for (long j = col; j < cols_; ++j) {
        if (r.m.at(pr, j).is_zero()) continue;
        r.m.at(i, j) -= f * r.m.at(pr, j);
      }
    }
    r.pivot_cols.push_back(col);
    r.pivot_row_of_col[col] = pr;
    ++pr;
  }
  r.rank = pr;
  return r;
}

inline long Matrix::rank() const { return reduced_row_echelon().rank; }

inline std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Reduced r = reduced_row_echelon();
  std::vector<std::vector<Scalar>> basis;
  for (long col = 0; col < cols_; ++col) {
    if (r.pivot_row_of_col[col] >= 0) continue;
    std::vector<Scalar> v(cols_, Scalar::zero());
    v[col] = Scalar::one();
    for (long pc = 0; pc < cols_; ++pc) {
      long prow = r.pivot_row_of_col[pc];
      if (prow >= 0) v[pc] = -r.m.at(prow, col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Matrix Matrix::inverse() const {
  require(rows_ == cols_, errc::shape_mismatch, "inverse of a non-square matrix");
  Matrix aug(rows_, 2 * cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one();
  }
  Reduced r = aug.reduced_row_echelon();
  for (long i = 0; i < rows_; ++i)
    require(r.pivot_row_of_col[i] == i, errc::singular_matrix, "matrix is not invertible");
  Matrix inv(rows_, cols_);
  for (long i = 0; i < rows_; ++i)
    for (long j = 0; j < cols_; ++j) inv.at(i, j) = r.m.at(i, cols_ + j);
  return inv;
}

inline std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  require(rows_ == b.rows_, errc::shape_mismatch, "solve with mismatched row counts");
  Matrix aug(rows_, cols_ + b.cols_);
  for (long i = 0; i < rows_; ++i) {
    for (long j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    for (long j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
  }
  Reduced r = aug.reduced_row_echelon();
  long arank = 0;
  for (long i = 0; i < cols_; ++i)
    if (r.pivot_row_of_col[i] >= 0) ++arank;
  require(arank == cols_, errc::singular_matrix, "solve requires full column rank");
  for (long i = arank; i < rows_; ++i)
    for (long j = 0; j < b.cols_; ++j)
      if (!r.m.at(i, cols_ + j).is_zero()) return std::nullopt;
  Matrix x(cols_, b.cols_);
  for (long i = 0; i < cols_; ++i) {
    long prow = r.pivot_row_of_col[i];
    for (long j = 0; j < b.cols_; ++j) x.at(i, j) = r.m.at(prow, cols_ + j);
  }
  return x;
}

inline std::vector<long> Matrix::column_basis() const { return reduced_row_echelon().pivot_cols; }

// Dimension of { A : A G = G A for every generator G }.  Constraints from
// diagonal generators are applied first as a support restriction on the
// unknown matrix; the rest become one linear system.
namespace detail {

// Linear system for the matrices P with P a_i = b_i P, where the a_i are
// dA x dA and the b_i are dB x dB, paired by index.  P is dB x dA.  Pairs
// where both generators are diagonal only restrict the support of P, so
// the actual system covers the remaining generators on that support.
struct HomSystem {
  long da = 0, db = 0;
  std::vector<std::pair<long, long>> support;  // (row in B, col in A)
  std::optional<Matrix> sys;                   // absent when no constraints remain
};

inline HomSystem hom_system(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  require(!a.empty() && a.size() == b.size(), errc::invalid_argument,
          "intertwiner generator lists must pair up");
  HomSystem h;
  h.da = a.front().rows();
  h.db = b.front().rows();
  for (const auto& g : a)
    require(g.rows() == h.da && g.cols() == h.da, errc::shape_mismatch,
            "intertwiner source generators must be square of equal size");
  for (const auto& g : b)
    require(g.rows() == h.db && g.cols() == h.db, errc::shape_mismatch,
            "intertwiner target generators must be square of equal size");

  std::vector<std::size_t> diag, full;
  for (std::size_t i = 0; i < a.size(); ++i)
    (a[i].is_diagonal() && b[i].is_diagonal() ? diag : full).push_back(i);

  for (long r = 0; r < h.db; ++r)
    for (long c = 0; c < h.da; ++c) {
      bool ok = true;
      for (std::size_t i : diag)
        if (b[i].at(r, r) != a[i].at(c, c)) {
          ok = false;
          break;
        }
      if (ok) h.support.emplace_back(r, c);
    }
  if (full.empty()) return h;

  std::vector<long> index(h.db * h.da, -1);
  for (std::size_t s = 0; s < h.support.size(); ++s)
    index[h.support[s].first * h.da + h.support[s].second] = static_cast<long>(s);

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i : full) {
    for (long r = 0; r < h.db; ++r)
      for (long c = 0; c < h.da; ++c) {
        std::vector<Scalar> row(h.support.size(), Scalar::zero());
        bool nonzero = false;
        for (long k = 0; k < h.da; ++k) {
          long idx = index[r * h.da + k];
          if (idx >= 0 && !a[i].at(k, c).is_zero()) {
            row[idx] += a[i].at(k, c);
            nonzero = true;
          }
        }
        for (long k = 0; k < h.db; ++k) {
          long idx = index[k * h.da + c];
          if (idx >= 0 && !b[i].at(r, k).is_zero()) {
            row[idx] -= b[i].at(r, k);
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
  }
  if (rows.empty()) return h;
  Matrix sys(static_cast<long>(rows.size()), static_cast<long>(h.support.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < h.support.size(); ++j) sys.at(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  h.sys = std::move(sys);
  return h;
}

}  // namespace detail

inline long hom_space_dimension(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  detail::HomSystem h = detail::hom_system(a, b);
  long free_dim = static_cast<long>(h.support.size());
  if (!h.sys) return free_dim;
  return free_dim - h.sys->rank();
}

// Basis of the solution space, as dB x dA matrices.
inline std::vector<Matrix> hom_space_basis(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  detail::HomSystem h = detail::hom_system(a, b);
  std::vector<std::vector<Scalar>> coords;
  if (!h.sys) {
    for (std::size_t s = 0; s < h.support.size(); ++s) {
      std::vector<Scalar> v(h.support.size(), Scalar::zero());
      v[s] = Scalar::one();
      coords.push_back(std::move(v));
    }
  } else {
    coords = h.sys->nullspace();
  }
  std::vector<Matrix> out;
  for (const auto& v : coords) {
    Matrix p(h.db, h.da);
    for (std::size_t s = 0; s < h.support.size(); ++s)
      p.at(h.support[s].first, h.support[s].second) = v[s];
    out.push_back(std::move(p));
  }
  return out;
}

inline long commutant_dimension(const std::vector<Matrix>& gens) {
  return hom_space_dimension(gens, gens);
}

// Incremental row echelon span: tracks the dimension of a growing span of
// exact coordinate vectors without refactoring from scratch.
class RowSpan {
 public:
  explicit RowSpan(long width) : width_(width) {}

  long dimension() const { return static_cast<long>(rows_.size()); }

  // Reduces v against the span; if independent, absorbs it and returns true.
  bool add(std::vector<Scalar> v) {
    require(static_cast<long>(v.size()) == width_, errc::shape_mismatch, "row width mismatch");
    for (const auto& [pivot, row] : rows_) {
      if (v[pivot].is_zero()) continue;
      Scalar f = v[pivot];
      for (long j = pivot; j < width_; ++j)
        if (!row[static_cast<std::size_t>(j)].is_zero())
          v[static_cast<std::size_t>(j)] =
              v[static_cast<std::size_t>(j)] - f * row[static_cast<std::size_t>(j)];
    }
    long pivot = -1;
    for (long j = 0; j < width_; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    Scalar inv = v[static_cast<std::size_t>(pivot)].inverse();
    for (long j = pivot; j < width_; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero())
        v[static_cast<std::size_t>(j)] = inv * v[static_cast<std::size_t>(j)];
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const auto& a, long b) { return a.first < b; });
    rows_.insert(pos, {pivot, std::move(v)});
    return true;
  }

 private:
  long width_;
  std::vector<std::pair<long, std::vector<Scalar>>> rows_;
};

}  // namespace hecke
