#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"
#include "openbook/seifert.hpp"

namespace openbook {

// Exponents (a_0, ..., a_n) of f(z) = z_0^{a_0} + ... + z_n^{a_n}.
struct BrieskornData {
  std::vector<unsigned long> exponents;

  explicit BrieskornData(std::vector<unsigned long> exps) : exponents(std::move(exps)) {
    if (exponents.empty()) throw OutOfRange("at least one exponent required");
    for (unsigned long a : exponents)
      if (a < 2) throw OutOfRange("every exponent must be >= 2");
  }

  unsigned long n() const { return (unsigned long)exponents.size() - 1; }
};

inline Int milnor_number(const BrieskornData& bd) {
  Int mu = 1;
  for (unsigned long a : bd.exponents) mu *= (a - 1);
  return mu;
}

// Global sign of the tensor Seifert matrix, one frozen constant per number
// of variables: epsilon(len) = (-1)^(len(len+1)/2). Pinned by the anchor
// tests: (2,3) gives the trefoil matrix [[-1,1],[0,-1]], (2,2,2) gives
// monodromy -1, and the (2,3) covers give sigma_7 = -8.
inline int tensor_sign(std::size_t len) {
  return (len * (len + 1) / 2) % 2 == 0 ? 1 : -1;
}

inline SeifertData seifert_matrix(const BrieskornData& bd) {
  IntMatrix l{{1}};
  for (unsigned long a : bd.exponents) {
    IntMatrix block(a - 1, a - 1);
    for (std::size_t i = 0; i + 1 < a; ++i) {
      block(i, i) = -1;
      if (i + 2 < a) block(i, i + 1) = 1;
    }
    l = kronecker(l, block);
  }
  if (tensor_sign(bd.exponents.size()) < 0) l = -l;
  return SeifertData(std::move(l), bd.n());
}

// Eigenvalue angles of the monodromy: { sum_i j_i/a_i mod 1 : 0 < j_i < a_i },
// sorted with multiplicity; theta stands for the eigenvalue exp(2*pi*i*theta).
inline std::vector<Rat> monodromy_spectrum(const BrieskornData& bd) {
  const std::size_t len = bd.exponents.size();
  std::vector<Rat> out;
  std::vector<unsigned long> x(len, 1);
  while (true) {
    Rat theta = 0;
    for (std::size_t i = 0; i < len; ++i) {
      Rat term(x[i], bd.exponents[i]);
      term.canonicalize();
      theta += term;
    }
    theta -= Rat(theta.get_num() / theta.get_den());
    out.push_back(theta);

    std::size_t p = len;
    bool done = true;
    while (p > 0) {
      --p;
      if (++x[p] < bd.exponents[p]) {
        done = false;
        break;
      }
      x[p] = 1;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Lattice-count signature: over all (x_0,...,x_n) with 0 < x_i < a_i, the
// value s = sum x_i/a_i mod 2 counts positive in (0,1) and negative in
// (1,2); boundary values s = 0, 1 count toward neither. The signed total is
// meaningful only when the middle dimension n is even. Arithmetic is over
// integers scaled by lcm(a_i), reduced mod 2*lcm as each coordinate enters.
inline CoverSignature brieskorn_signature(const BrieskornData& bd) {
  const std::size_t len = bd.exponents.size();
  Int l = 1;
  for (unsigned long a : bd.exponents) l = lcm(l, Int(a));
  const Int mod = 2 * l;
  std::vector<Int> w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = l / Int(bd.exponents[i]);

  std::vector<unsigned long> x(len, 1);
  std::vector<Int> prefix(len + 1);
  auto recompute_from = [&](std::size_t i) {
    for (; i < len; ++i) prefix[i + 1] = (prefix[i] + Int(x[i]) * w[i]) % mod;
  };
  recompute_from(0);

  unsigned long pos = 0, neg = 0;
  while (true) {
    const Int& v = prefix[len];
    if (v > 0 && v < l) ++pos;
    else if (v > l) ++neg;

    std::size_t p = len;
    bool done = true;
    while (p > 0) {
      --p;
      if (++x[p] < bd.exponents[p]) {
        done = false;
        break;
      }
      x[p] = 1;
    }
    if (done) break;
    recompute_from(p);
  }
  return {(long)pos - (long)neg, bd.n() % 2 == 0};
}

// sigma_k via the appended exponent: the k-fold cover branched over the link
// of (a_0,...,a_n) bounds the Milnor fiber of (a_0,...,a_n,k).
inline CoverSignature cover_signature_lattice(const BrieskornData& bd, unsigned long k) {
  if (k < 2) throw OutOfRange("cover index must be >= 2");
  std::vector<unsigned long> exps = bd.exponents;
  exps.push_back(k);
  return brieskorn_signature(BrieskornData(std::move(exps)));
}

}  // namespace openbook
