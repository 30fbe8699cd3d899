#pragma once

#include <cstddef>
#include <cstdlib>
#include <utility>

#include "openbook/abelian.hpp"
#include "openbook/matrix.hpp"

namespace openbook {

// U*A*V = D with U, V unimodular; D diagonal, nonnegative, d_i | d_{i+1}.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

namespace detail {

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[a] += f * row[b]
inline void add_row(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(a, j) += f * m(b, j);
}

inline void add_col(IntMatrix& m, std::size_t a, std::size_t b, const Int& f) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, a) += f * m(i, b);
}

}  // namespace detail

inline SnfResult snf(const IntMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  SnfResult res{IntMatrix::identity(r), a, IntMatrix::identity(c)};
  IntMatrix& D = res.D;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  const std::size_t lim = r < c ? r : c;
  for (std::size_t t = 0; t < lim; ++t) {
    // smallest nonzero |entry| in the trailing block as pivot
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (D(i, j) != 0 && (!found || cmp(abs(D(i, j)), abs(D(pi, pj))) < 0)) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) {
      detail::swap_rows(D, t, pi);
      detail::swap_rows(U, t, pi);
    }
    if (pj != t) {
      detail::swap_cols(D, t, pj);
      detail::swap_cols(V, t, pj);
    }

    for (bool dirty = true; dirty;) {
      dirty = false;
      // clear column t; a Bezout pair puts gcd in the pivot in one step
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        if (D(i, t) % D(t, t) == 0) {
          const Int q = D(i, t) / D(t, t);
          detail::add_row(D, i, t, -q);
          detail::add_row(U, i, t, -q);
        } else {
          Int g, x, y;
          mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                     D(t, t).get_mpz_t(), D(i, t).get_mpz_t());
          const Int ps = D(t, t) / g, vs = D(i, t) / g;
          for (std::size_t jj = 0; jj < c; ++jj) {
            const Int rt = D(t, jj), ri = D(i, jj);
            D(t, jj) = x * rt + y * ri;
            D(i, jj) = ps * ri - vs * rt;
          }
          for (std::size_t jj = 0; jj < r; ++jj) {
            const Int ut = U(t, jj), ui = U(i, jj);
            U(t, jj) = x * ut + y * ui;
            U(i, jj) = ps * ui - vs * ut;
          }
        }
      }
      // clear row t; a Bezout column pair can re-dirty column t below the pivot
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        if (D(t, j) % D(t, t) == 0) {
          const Int q = D(t, j) / D(t, t);
          detail::add_col(D, j, t, -q);
          detail::add_col(V, j, t, -q);
        } else {
          Int g, x, y;
          mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                     D(t, t).get_mpz_t(), D(t, j).get_mpz_t());
          const Int ps = D(t, t) / g, ws = D(t, j) / g;
          for (std::size_t ii = 0; ii < r; ++ii) {
            const Int ct = D(ii, t), cj = D(ii, j);
            D(ii, t) = x * ct + y * cj;
            D(ii, j) = ps * cj - ws * ct;
          }
          for (std::size_t ii = 0; ii < c; ++ii) {
            const Int vt = V(ii, t), vj = V(ii, j);
            V(ii, t) = x * vt + y * vj;
            V(ii, j) = ps * vj - ws * vt;
          }
          dirty = true;
        }
      }
      if (dirty) continue;
      // divisibility repair: pull a non-multiple into the pivot row
      for (std::size_t i = t + 1; i < r && !dirty; ++i)
        for (std::size_t j = t + 1; j < c && !dirty; ++j)
          if (D(i, j) % D(t, t) != 0) {
            detail::add_row(D, t, i, 1);
            detail::add_row(U, t, i, 1);
            dirty = true;
          }
    }
  }
  for (std::size_t t = 0; t < lim; ++t)
    if (D(t, t) < 0) {
      for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
      for (std::size_t j = 0; j < r; ++j) U(t, j) = -U(t, j);
    }
  return res;
}

// Structure of coker(A^T: Z^rows -> Z^cols), i.e. generators = columns,
// relations = rows. Unit invariant factors are dropped.
inline AbelianGroup cokernel_structure(const IntMatrix& a) {
  SnfResult s = snf(a);
  const std::size_t lim = a.rows() < a.cols() ? a.rows() : a.cols();
  std::size_t rank = 0;
  std::vector<Int> torsion;
  for (std::size_t t = 0; t < lim; ++t) {
    if (s.D(t, t) == 0) break;
    ++rank;
    if (s.D(t, t) > 1) torsion.push_back(s.D(t, t));
  }
  return AbelianGroup{a.cols() - rank, std::move(torsion)};
}

inline std::size_t rank(const IntMatrix& a) {
  SnfResult s = snf(a);
  const std::size_t lim = a.rows() < a.cols() ? a.rows() : a.cols();
  std::size_t r = 0;
  while (r < lim && s.D(r, r) != 0) ++r;
  return r;
}

inline bool is_unimodular(const IntMatrix& a) {
  if (!a.is_square()) throw NonSquare();
  Int d = determinant(a);
  return d == 1 || d == -1;
}

}  // namespace openbook
