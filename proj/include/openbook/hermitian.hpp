#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "openbook/cyclotomic.hpp"
#include "openbook/dinterval.hpp"
#include "openbook/errors.hpp"
#include "openbook/intervals.hpp"
#include "openbook/matrix.hpp"
#include "openbook/signature.hpp"

namespace openbook {
namespace detail {

// Congruence elimination of a Hermitian interval matrix, generic over the
// interval backend. 1x1 pivots use the diagonal entry with the widest
// certified margin; when no diagonal certifies, a 2x2 off-diagonal block with
// certified negative determinant contributes one eigenvalue of each sign.
// Stops after target_rank eliminated dimensions; the caller must know from an
// exact rank certificate that the block left behind is identically zero.
// Returns nullopt when the working precision cannot certify a pivot.
template <class C>
std::optional<SignatureTriple> hermitian_inertia_core(std::vector<std::vector<C>>& M,
                                                      std::size_t target_rank) {
  const std::size_t n = M.size();
  SignatureTriple out;
  auto swap_basis = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(M[i][x], M[i][y]);
    std::swap(M[x], M[y]);
  };

  std::size_t t = 0;
  while (t < target_rank) {
    std::size_t best = n;
    double best_w = 0.0;
    for (std::size_t s = t; s < n; ++s) {
      double w = M[s][s].re.mig();
      if (w > best_w) {
        best = s;
        best_w = w;
      }
    }
    if (best != n) {
      swap_basis(t, best);
      const auto piv = M[t][t].re;
      if (piv.certified_sign() > 0)
        ++out.positive;
      else
        ++out.negative;
      for (std::size_t i = t + 1; i < n; ++i) {
        const C f = M[i][t].div_by_real(piv);
        for (std::size_t j = t + 1; j < n; ++j) M[i][j] = M[i][j] - f * M[t][j];
      }
      ++t;
      continue;
    }

    if (t + 2 > target_rank) return std::nullopt;
    std::size_t r = n, c = n;
    double best_w2 = 0.0;
    for (std::size_t i = t; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double w = std::max(M[i][j].re.mig(), M[i][j].im.mig());
        if (w > best_w2) {
          r = i;
          c = j;
          best_w2 = w;
        }
      }
    if (r == n) return std::nullopt;
    swap_basis(t, r);
    swap_basis(t + 1, c);

    const C a = M[t][t], b = M[t][t + 1], d = M[t + 1][t + 1];
    const auto det2 = a.re * d.re - (b.re * b.re + b.im * b.im);
    if (det2.certified_sign() >= 0) return std::nullopt;
    ++out.positive;
    ++out.negative;
    const C ar{a.re, a.re.zeroed()}, dr{d.re, d.re.zeroed()};
    for (std::size_t i = t + 2; i < n; ++i) {
      const C u = M[i][t], v = M[i][t + 1];
      const C f1 = (u * dr - v * b.conj()).div_by_real(det2);
      const C f2 = (v * ar - u * b).div_by_real(det2);
      for (std::size_t j = t + 2; j < n; ++j)
        M[i][j] = M[i][j] - f1 * M[t][j] - f2 * M[t + 1][j];
    }
    t += 2;
  }
  out.null = n - t;
  return out;
}

// B(w) = (1-w)L + (1-conj(w))L^T at w = exp(2*pi*i*a/m), MPFR enclosures.
inline std::vector<std::vector<ComplexInterval>> hermitian_form_mpfr(const IntMatrix& l,
                                                                     unsigned long a,
                                                                     unsigned long m,
                                                                     mpfr_prec_t prec) {
  const std::size_t n = l.rows();
  Rat theta(a, m);
  theta.canonicalize();
  const ComplexInterval omega{cos_two_pi(theta, prec), sin_two_pi(theta, prec)};
  const ComplexInterval one{Interval::from(Int(1), prec), Interval(prec)};
  const ComplexInterval c1 = one - omega;
  const ComplexInterval c2 = one - omega.conj();
  std::vector<std::vector<ComplexInterval>> M(
      n, std::vector<ComplexInterval>(n, ComplexInterval(prec)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ComplexInterval lij{Interval::from(l(i, j), prec), Interval(prec)};
      const ComplexInterval lji{Interval::from(l(j, i), prec), Interval(prec)};
      M[i][j] = c1 * lij + c2 * lji;
    }
  return M;
}

// Same form with machine-double enclosures, the fast first rung.
inline std::vector<std::vector<CDInterval>> hermitian_form_double(const IntMatrix& l,
                                                                  unsigned long a,
                                                                  unsigned long m) {
  const std::size_t n = l.rows();
  Rat theta(a, m);
  theta.canonicalize();
  const CDInterval omega{DInterval::from(cos_two_pi(theta, 96)),
                         DInterval::from(sin_two_pi(theta, 96))};
  const CDInterval one{DInterval{1.0, 1.0}, DInterval{}};
  const CDInterval c1 = one - omega;
  const CDInterval c2 = one - omega.conj();
  std::vector<std::vector<CDInterval>> M(n, std::vector<CDInterval>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const CDInterval lij{DInterval::from(l(i, j)), DInterval{}};
      const CDInterval lji{DInterval::from(l(j, i)), DInterval{}};
      M[i][j] = c1 * lij + c2 * lji;
    }
  return M;
}

struct ExactHermitianPivots {
  std::vector<CycloField::Elem> pivots;  // exact, nonzero, real-subfield
  std::size_t null = 0;
};

// Exact congruence elimination over Q[t]/Phi_m; all zero tests are exact, so
// the null count is exact. Signs of the surviving pivots are certified
// separately by interval evaluation. Quadratic-size coefficient growth keeps
// this to small matrices; it serves as an independent oracle.
inline ExactHermitianPivots hermitian_eliminate_exact(const CycloField& f,
                                                      std::vector<std::vector<CycloField::Elem>> M) {
  const std::size_t n = M.size();
  ExactHermitianPivots out;
  auto swap_basis = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < n; ++i) std::swap(M[i][x], M[i][y]);
    std::swap(M[x], M[y]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t s = t;
    while (s < n && CycloField::is_zero(M[s][s])) ++s;
    if (s == n) {
      std::size_t r = n, c = n;
      for (std::size_t i = t; i < n && r == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (!CycloField::is_zero(M[i][j])) {
            r = i;
            c = j;
            break;
          }
      if (r == n) {
        out.null += n - t;
        return out;
      }
      // all remaining diagonal entries vanish; for b = M[r][c] != 0 one of
      // u = 1, zeta yields u*conj(b) + conj(u)*b != 0 (m >= 3)
      CycloField::Elem u = f.power(0);
      auto new_diag = [&](const CycloField::Elem& uu) {
        return f.add(f.mul(uu, M[r][c]), f.mul(f.conj(uu), M[c][r]));
      };
      if (CycloField::is_zero(new_diag(u))) u = f.power(1);
      for (std::size_t i = t; i < n; ++i) M[i][r] = f.add(M[i][r], f.mul(u, M[i][c]));
      CycloField::Elem uc = f.conj(u);
      for (std::size_t j = t; j < n; ++j) M[r][j] = f.add(M[r][j], f.mul(uc, M[c][j]));
      s = r;
    }
    swap_basis(t, s);
    const CycloField::Elem piv = M[t][t];
    const CycloField::Elem piv_inv = f.inverse(piv);
    for (std::size_t i = t + 1; i < n; ++i) {
      if (CycloField::is_zero(M[i][t])) continue;
      CycloField::Elem coef = f.mul(M[i][t], piv_inv);
      for (std::size_t j = t + 1; j < n; ++j)
        M[i][j] = f.sub(M[i][j], f.mul(coef, M[t][j]));
    }
    out.pivots.push_back(piv);
  }
  return out;
}

}  // namespace detail
}  // namespace openbook
