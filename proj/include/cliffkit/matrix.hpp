#pragma once

#include <optional>
#include <vector>

#include "cliffkit/numeric.hpp"

namespace cliffkit {

// Dense matrix over an arbitrary exact ring.  Multiplication keeps the
// left-to-right order of entry products, so entries may be noncommutative
// (e.g. quaternion-like division ring elements).
template <class T>
struct Matrix {
  int nr = 0, nc = 0;
  std::vector<T> a;

  Matrix() = default;
  Matrix(int r, int c) : nr(r), nc(c), a(static_cast<size_t>(r) * c) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  T& at(int i, int j) { return a[static_cast<size_t>(i) * nc + j]; }
  const T& at(int i, int j) const { return a[static_cast<size_t>(i) * nc + j]; }

  bool is_zero() const {
    for (auto& x : a)
      if (!ck_is_zero(x)) return false;
    return true;
  }

  Matrix operator-() const {
    Matrix m(nr, nc);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = -a[k];
    return m;
  }
  Matrix operator+(const Matrix& o) const {
    check(nr == o.nr && nc == o.nc, "matrix shape mismatch");
    Matrix m(nr, nc);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] + o.a[k];
    return m;
  }
  Matrix operator-(const Matrix& o) const { return *this + (-o); }
  Matrix operator*(const Matrix& o) const {
    check(nc == o.nr, "matrix shape mismatch");
    Matrix m(nr, o.nc);
    for (int i = 0; i < nr; ++i)
      for (int k = 0; k < nc; ++k) {
        const T& l = at(i, k);
        if (ck_is_zero(l)) continue;
        for (int j = 0; j < o.nc; ++j) {
          const T& r = o.at(k, j);
          if (ck_is_zero(r)) continue;
          m.at(i, j) += l * r;
        }
      }
    return m;
  }
  Matrix scaled(const T& s) const {
    Matrix m(nr, nc);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] * s;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return nr == o.nr && nc == o.nc && a == o.a;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Plain transpose: entries are not conjugated.
  Matrix transpose() const {
    Matrix m(nc, nr);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  template <class F>
  Matrix map(F f) const {
    Matrix m(nr, nc);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = f(a[k]);
    return m;
  }
};

template <class T>
Matrix<T> kron(const Matrix<T>& A, const Matrix<T>& B) {
  Matrix<T> m(A.nr * B.nr, A.nc * B.nc);
  for (int i = 0; i < A.nr; ++i)
    for (int j = 0; j < A.nc; ++j) {
      if (ck_is_zero(A.at(i, j))) continue;
      for (int k = 0; k < B.nr; ++k)
        for (int l = 0; l < B.nc; ++l)
          m.at(i * B.nr + k, j * B.nc + l) = A.at(i, j) * B.at(k, l);
    }
  return m;
}

template <class T>
bool commutes(const Matrix<T>& A, const Matrix<T>& B) {
  return (A * B - B * A).is_zero();
}

template <class T>
bool anticommutes(const Matrix<T>& A, const Matrix<T>& B) {
  return (A * B + B * A).is_zero();
}

// +1 / -1 if M is plus/minus the identity (times `one`), nullopt otherwise.
template <class T>
std::optional<int> pm_identity(const Matrix<T>& M, const T& one) {
  if (M.nr != M.nc) return std::nullopt;
  for (int s : {+1, -1}) {
    Matrix<T> I = Matrix<T>::identity(M.nr, one);
    if (s < 0) I = -I;
    if (M == I) return s;
  }
  return std::nullopt;
}

// Sign s with M == s * unit; throws when M is neither.
template <class T>
int pm_identity_matrix(const Matrix<T>& M, const Matrix<T>& unit) {
  if (M == unit) return +1;
  if (M == -unit) return -1;
  throw internal_error("matrix is not a sign times the unit");
}

// Entrywise complex conjugation.
inline Matrix<CRat> conj(const Matrix<CRat>& M) {
  return M.map([](const CRat& c) { return c.conj(); });
}
inline Matrix<CSurd> conj(const Matrix<CSurd>& M) {
  return M.map([](const CSurd& c) { return c.conj(); });
}

// ---------------------------------------------------------------------------
// Exact Gaussian elimination over Cx<Rat>, used for rank and linear solves.

inline int rref(Matrix<CRat>& M, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < M.nc && rank < M.nr; ++col) {
    int piv = -1;
    for (int r = rank; r < M.nr; ++r)
      if (!M.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < M.nc; ++j) std::swap(M.at(rank, j), M.at(piv, j));
    CRat inv = cx_div(CRat(1), M.at(rank, col));
    for (int j = 0; j < M.nc; ++j) M.at(rank, j) = M.at(rank, j) * inv;
    for (int r = 0; r < M.nr; ++r) {
      if (r == rank || M.at(r, col).is_zero()) continue;
      CRat f = M.at(r, col);
      for (int j = 0; j < M.nc; ++j)
        M.at(r, j) = M.at(r, j) - f * M.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

inline int rank_of(Matrix<CRat> M) { return rref(M); }

// Solve A x = b exactly; nullopt if inconsistent.  A is (m x n), b is (m).
inline std::optional<std::vector<CRat>> solve(const Matrix<CRat>& A,
                                              const std::vector<CRat>& b) {
  Matrix<CRat> M(A.nr, A.nc + 1);
  for (int i = 0; i < A.nr; ++i) {
    for (int j = 0; j < A.nc; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.nc) = b[i];
  }
  std::vector<int> piv;
  rref(M, &piv);
  std::vector<CRat> x(A.nc, CRat(0));
  int row = 0;
  for (int col : piv) {
    if (col == A.nc) return std::nullopt;  // pivot in the rhs column
    x[col] = M.at(row, A.nc);
    ++row;
  }
  // Reject non-solutions (rows 0 = nonzero are caught by the pivot test; a
  // free-variable solution is fine for our use, callers want *a* solution).
  return x;
}

}  // namespace cliffkit
