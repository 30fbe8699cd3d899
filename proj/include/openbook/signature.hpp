#pragma once

#include <cstddef>

#include "openbook/matrix.hpp"

namespace openbook {

struct SignatureTriple {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  bool operator==(const SignatureTriple&) const = default;
  long sigma() const { return (long)positive - (long)negative; }
};

// Exact inertia by rational congruence diagonalization. A zero diagonal with
// a nonzero off-diagonal entry is handled by the substitution x_i += x_j,
// which turns the hyperbolic pair into (+1, -1) pivots.
inline SignatureTriple signature_symmetric(const RatMatrix& q) {
  if (!q.is_square()) throw NonSquare();
  const std::size_t n = q.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (q(i, j) != q(j, i)) throw NotSymmetric();

  RatMatrix m = q;
  SignatureTriple out;
  for (std::size_t t = 0; t < n; ++t) {
    if (m(t, t) == 0) {
      std::size_t s = t + 1;
      while (s < n && m(s, s) == 0) ++s;
      if (s < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(m(t, j), m(s, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(m(i, t), m(i, s));
      } else {
        std::size_t r = n, c = n;
        for (std::size_t i = t; i < n && r == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (m(i, j) != 0) {
              r = i;
              c = j;
              break;
            }
        if (r == n) {
          out.null += n - t;
          return out;
        }
        for (std::size_t j = 0; j < n; ++j) m(r, j) += m(c, j);
        for (std::size_t i = 0; i < n; ++i) m(i, r) += m(i, c);
        if (r != t) {
          for (std::size_t j = 0; j < n; ++j) std::swap(m(t, j), m(r, j));
          for (std::size_t i = 0; i < n; ++i) std::swap(m(i, t), m(i, r));
        }
      }
    }
    const Rat piv = m(t, t);
    if (piv > 0) ++out.positive;
    else ++out.negative;
    for (std::size_t i = t + 1; i < n; ++i) {
      if (m(i, t) == 0) continue;
      Rat f = m(i, t) / piv;
      for (std::size_t j = t; j < n; ++j) m(i, j) -= f * m(t, j);
      for (std::size_t j = t; j < n; ++j) m(j, i) = m(i, j);
    }
  }
  out.null = n - out.positive - out.negative;
  return out;
}

}  // namespace openbook
