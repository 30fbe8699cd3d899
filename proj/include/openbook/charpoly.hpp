#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"
#include "openbook/poly.hpp"

namespace openbook {
namespace detail {

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (std::uint64_t)((unsigned __int128)a * b % p);
}

inline std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

// p prime
inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

// Monic char poly det(tI - H) of H mod p, coefficient vector by ascending
// degree. Similarity reduction to Hessenberg form, then the standard
// leading-principal-minor recurrence.
inline std::vector<std::uint64_t> char_poly_mod(std::vector<std::vector<std::uint64_t>> h,
                                                std::uint64_t p) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = 0;
    for (std::size_t i = j + 1; i < n && piv == 0; ++i)
      if (h[i][j] != 0) piv = i;
    if (piv == 0) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t inv = inv_mod(h[j + 1][j], p);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const std::uint64_t f = mul_mod(h[r][j], inv, p);
      for (std::size_t c = j; c < n; ++c)
        h[r][c] = sub_mod(h[r][c], mul_mod(f, h[j + 1][c], p), p);
      for (std::size_t rr = 0; rr < n; ++rr)
        h[rr][j + 1] = add_mod(h[rr][j + 1], mul_mod(f, h[rr][r], p), p);
    }
  }

  // pk[k] = det(tI - H_k) for the leading k x k block
  std::vector<std::vector<std::uint64_t>> pk(n + 1);
  pk[0] = {1 % p};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::uint64_t>& cur = pk[k];
    cur.assign(k + 1, 0);
    const std::vector<std::uint64_t>& prev = pk[k - 1];
    const std::uint64_t hk = h[k - 1][k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = add_mod(cur[i + 1], prev[i], p);
      cur[i] = sub_mod(cur[i], mul_mod(hk, prev[i], p), p);
    }
    std::uint64_t beta = 1 % p;
    for (std::size_t i = k - 1; i >= 1; --i) {
      beta = mul_mod(beta, h[i][i - 1], p);
      if (beta == 0) break;
      const std::uint64_t c = mul_mod(h[i - 1][k - 1], beta, p);
      if (c == 0) continue;
      const std::vector<std::uint64_t>& pi = pk[i - 1];
      for (std::size_t q = 0; q < pi.size(); ++q)
        cur[q] = sub_mod(cur[q], mul_mod(c, pi[q], p), p);
    }
  }
  return pk[n];
}

// Monic char poly det(tI - A), exact. Modular images at word-size primes are
// lifted by CRT past a Hadamard-type bound on the coefficients, so the
// reconstruction is certified, not heuristic.
inline IntPoly char_poly_crt(const IntMatrix& a) {
  if (!a.is_square()) throw NonSquare();
  const std::size_t n = a.rows();
  if (n == 0) return {Int(1)};

  double max_abs = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double v = std::abs(a(i, j).get_d());
      if (v > max_abs) max_abs = v;
    }
  // |c_k| <= C(n,k) (sqrt(n) A)^k <= (1 + sqrt(n) A)^n
  const double bits_needed = (double)n * std::log2(1.0 + std::sqrt((double)n) * max_abs) + 2;

  Int modulus = 1;
  std::vector<Int> coeff(n + 1, Int(0));
  Int prime_seed = (Int(1) << 61);
  double bits_have = 0;
  while (bits_have < bits_needed) {
    mpz_nextprime(prime_seed.get_mpz_t(), prime_seed.get_mpz_t());
    const std::uint64_t p = prime_seed.get_ui();

    std::vector<std::vector<std::uint64_t>> ap(n, std::vector<std::uint64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Int r = a(i, j) % Int((unsigned long)p);
        if (r < 0) r += Int((unsigned long)p);
        ap[i][j] = r.get_ui();
      }
    std::vector<std::uint64_t> cp = char_poly_mod(std::move(ap), p);

    if (modulus == 1) {
      for (std::size_t i = 0; i <= n; ++i) coeff[i] = Int((unsigned long)cp[i]);
      modulus = Int((unsigned long)p);
    } else {
      Int minv_z = modulus % Int((unsigned long)p);
      if (minv_z < 0) minv_z += Int((unsigned long)p);
      const std::uint64_t minv = inv_mod(minv_z.get_ui(), p);
      for (std::size_t i = 0; i <= n; ++i) {
        Int ri = coeff[i] % Int((unsigned long)p);
        if (ri < 0) ri += Int((unsigned long)p);
        const std::uint64_t delta = mul_mod(sub_mod(cp[i], ri.get_ui(), p), minv, p);
        coeff[i] += modulus * Int((unsigned long)delta);
      }
      modulus *= Int((unsigned long)p);
    }
    bits_have += 61.0;
  }

  const Int half = modulus / 2;
  for (Int& c : coeff)
    if (c > half) c -= modulus;
  if (coeff[n] != 1) throw Error("characteristic polynomial reconstruction is not monic");
  return coeff;
}

// Exact rank by fraction-free (Bareiss) elimination. Full pivoting on the
// entry of least nonzero magnitude keeps the exact divisions cheap; stops as
// soon as the remaining block vanishes.
inline std::size_t rank_bareiss(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Int denom = 1;
  std::size_t r = 0;
  while (r < rows && r < cols) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = r; i < rows; ++i)
      for (std::size_t j = r; j < cols; ++j)
        if (a(i, j) != 0 &&
            (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == rows) return r;
    if (pi != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pi, j));
    if (pj != r)
      for (std::size_t i = 0; i < rows; ++i) std::swap(a(i, r), a(i, pj));
    for (std::size_t i = r + 1; i < rows; ++i)
      for (std::size_t j = r + 1; j < cols; ++j) {
        Int num = a(r, r) * a(i, j) - a(i, r) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      }
    denom = a(r, r);
    ++r;
  }
  return r;
}

}  // namespace detail
}  // namespace openbook
