#pragma once

#include <cstddef>
#include <vector>

#include "openbook/matrix.hpp"

namespace openbook {

// Dense integer polynomial, coeffs[i] is the t^i coefficient.
using IntPoly = std::vector<Int>;

inline void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::size_t poly_degree(const IntPoly& p) { return p.empty() ? 0 : p.size() - 1; }

inline bool poly_is_zero(const IntPoly& p) {
  for (const Int& c : p)
    if (c != 0) return false;
  return true;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// Exact quotient a / b for monic b; remainder must vanish.
inline IntPoly poly_div_exact_monic(IntPoly a, const IntPoly& b) {
  poly_trim(a);
  if (poly_is_zero(a)) return {};
  if (a.size() < b.size()) throw Error("polynomial division is not exact");
  IntPoly q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int c = a[i + b.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  if (!poly_is_zero(a)) throw Error("polynomial division is not exact");
  return q;
}

// Remainder of a mod monic b, over Z.
inline IntPoly poly_rem_monic(IntPoly a, const IntPoly& b) {
  poly_trim(a);
  while (a.size() >= b.size()) {
    Int c = a.back();
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[a.size() - b.size() + j] -= c * b[j];
    a.pop_back();
    poly_trim(a);
  }
  return a;
}

inline Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// m-th cyclotomic polynomial via (t^m - 1) / prod_{d | m, d < m} Phi_d.
inline IntPoly cyclotomic_polynomial(unsigned long m) {
  IntPoly num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) num = poly_div_exact_monic(num, cyclotomic_polynomial(d));
  return num;
}

// Interpolation through (i, values[i]) for i = 0..n-1 in Newton form;
// coefficients must come out integral.
inline IntPoly interpolate_integer(const std::vector<Int>& values) {
  const std::size_t n = values.size();
  std::vector<Rat> dd(n), newton(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = Rat(values[i]);
  for (std::size_t k = 0; k < n; ++k) {
    newton[k] = dd[0];
    for (std::size_t i = 0; i + k + 1 < n; ++i) dd[i] = (dd[i + 1] - dd[i]) / Rat(k + 1);
  }
  // expand sum_k newton[k] * t(t-1)...(t-k+1)
  std::vector<Rat> acc(n), factor{Rat(1)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < factor.size(); ++i) acc[i] += newton[k] * factor[i];
    if (k + 1 < n) {
      factor.push_back(Rat(0));
      for (std::size_t i = factor.size(); i-- > 1;)
        factor[i] = factor[i - 1] - Rat(k) * factor[i];
      factor[0] *= Rat(-(long)k);
    }
  }
  IntPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (acc[i].get_den() != 1) throw Error("interpolation produced non-integer coefficient");
    out[i] = acc[i].get_num();
  }
  return out;
}

// Monic char poly det(tI - A), exact, via interpolation at t = 0..n.
inline IntPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw NonSquare();
  const std::size_t n = a.rows();
  std::vector<Int> values(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? Int(x) - a(i, j) : Int(-a(i, j));
    values[x] = determinant(m);
  }
  return interpolate_integer(values);
}

// P(t) = det(L^T - t L); the Tristram-Levine form at omega is singular
// exactly when P(conj(omega)) = 0, i.e. Phi_m | P for primitive order m.
inline IntPoly det_pencil(const IntMatrix& l) {
  if (!l.is_square()) throw NonSquare();
  const std::size_t n = l.rows();
  std::vector<Int> values(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = l(j, i) - Int(x) * l(i, j);
    values[x] = determinant(m);
  }
  return interpolate_integer(values);
}

}  // namespace openbook
