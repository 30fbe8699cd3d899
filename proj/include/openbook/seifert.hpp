#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "openbook/abelian.hpp"
#include "openbook/charpoly.hpp"
#include "openbook/errors.hpp"
#include "openbook/hermitian.hpp"
#include "openbook/matrix.hpp"
#include "openbook/poly.hpp"
#include "openbook/signature.hpp"
#include "openbook/smith.hpp"

namespace openbook {

// Seifert matrix L of a simple open book whose page F is 2n-dimensional;
// mu = rank H_n(F). mu = 0 is the disk page (standard sphere).
struct SeifertData {
  IntMatrix L;
  unsigned long n = 1;

  SeifertData(IntMatrix l, unsigned long dim) : L(std::move(l)), n(dim) {
    if (!L.is_square()) throw NonSquare("Seifert matrix must be square");
  }

  std::size_t mu() const { return L.rows(); }
};

inline bool is_fibered(const SeifertData& sd) {
  Int d = determinant(sd.L);
  return d == 1 || d == -1;
}

// Conventions, fixed once: V = -L^{-1}, h = (-1)^(n+1) L^{-1} L^T,
// S = L + (-1)^n L^T. They satisfy h - I = V*S identically.
struct OpenBookInvariants {
  IntMatrix S;
  IntMatrix h;
  IntMatrix V;
};

inline IntMatrix intersection_form(const SeifertData& sd) {
  IntMatrix lt = sd.L.transpose();
  return sd.n % 2 == 0 ? sd.L + lt : sd.L - lt;
}

inline OpenBookInvariants invariants(const SeifertData& sd) {
  if (!is_fibered(sd)) throw NotFibered();
  RatMatrix linv = inverse(to_rational(sd.L));
  RatMatrix v = -linv;
  RatMatrix h = linv * to_rational(sd.L.transpose());
  if (sd.n % 2 == 0) h = -h;
  auto vz = to_integral(v);
  auto hz = to_integral(h);
  if (!vz || !hz) throw NotFibered("variation or monodromy is not integral");
  return {intersection_form(sd), std::move(*hz), std::move(*vz)};
}

// Var(phi^k) = (sum_{i<k} h^i) * V
inline IntMatrix variation_power(const SeifertData& sd, unsigned long k) {
  if (k == 0) throw OutOfRange("power must be >= 1");
  OpenBookInvariants inv = invariants(sd);
  const std::size_t mu = sd.mu();
  IntMatrix acc(mu, mu);
  IntMatrix cur = IntMatrix::identity(mu);
  for (unsigned long i = 0; i < k; ++i) {
    acc = acc + cur;
    if (i + 1 < k) cur = cur * inv.h;
  }
  return acc * inv.V;
}

// Smallest d <= d_max with Var(phi^d) = 0; V is invertible, so this is the
// smallest d with sum_{i<d} h^i = 0.
inline std::optional<unsigned long> min_trivializing_power(const SeifertData& sd,
                                                           unsigned long d_max) {
  OpenBookInvariants inv = invariants(sd);
  const std::size_t mu = sd.mu();
  IntMatrix acc(mu, mu);
  IntMatrix cur = IntMatrix::identity(mu);
  for (unsigned long d = 1; d <= d_max; ++d) {
    acc = acc + cur;
    if (acc.is_zero()) return d;
    cur = cur * inv.h;
  }
  return std::nullopt;
}

struct CoverHomology {
  unsigned long k = 1;
  AbelianGroup h_n;         // H_n(M_k) = coker Var(phi^k)
  AbelianGroup h_n_plus_1;  // H_{n+1}(M_k) = ker Var(phi^k), free
};

inline CoverHomology cover_homology(const SeifertData& sd, unsigned long k) {
  IntMatrix w = variation_power(sd, k);
  AbelianGroup coker = cokernel_structure(w);
  // w is square, so ker and coker have equal rank
  AbelianGroup kernel{coker.free_rank, {}};
  return {k, std::move(coker), std::move(kernel)};
}

inline bool is_homotopy_sphere_link(const SeifertData& sd) {
  if (sd.mu() == 0) return true;
  Int d = determinant(sd.L);
  return d == 1 || d == -1;
}

// H_q(DF) = H_q(F) (+) H_q(F, dF) for the double DF, reported in the three
// degrees where a handlebody page has homology: q = 0, n, 2n.
inline std::vector<std::pair<unsigned long, AbelianGroup>> double_homology(
    const SeifertData& sd) {
  return {{0, AbelianGroup{1, {}}},
          {sd.n, AbelianGroup{2 * sd.mu(), {}}},
          {2 * sd.n, AbelianGroup{1, {}}}};
}

// sigma_k = sum_{j=1}^{k-1} sigma(B(exp(2*pi*i*j/k))). The signed value is
// geometrically meaningful only when 2n+2 = 0 mod 4, i.e. n odd; otherwise
// the value is reported as 0 with meaningful = false.
struct CoverSignature {
  long value = 0;
  bool meaningful = false;
};

// Inertia of B(w) = (1-w)L + (1-conj(w))L^T at roots of unity, for one fixed
// Seifert matrix. w = -1 is exact rational arithmetic. Elsewhere a
// machine-double interval elimination at full rank runs first; certifying all
// mu pivots proves B(w) nondegenerate and exact. When that fails, the nullity
// is established exactly: w is an eigenvalue of M = L^{-1}L^T exactly when
// B(w) degenerates, its geometric multiplicity is dim ker Phi_m(M) / phi(m),
// and Phi_m has simple roots so multiplicity one in the characteristic
// polynomial already forces nullity one. MPFR elimination with doubling
// precision then certifies the inertia, stopping at the certified rank, and
// throws PrecisionExhausted past the cap. The characteristic polynomial,
// per-level nullities, and per-root inertias are cached; conjugate roots have
// equal inertia, so keys canonicalize to 2a <= m.
class CoverSignatureEngine {
 public:
  explicit CoverSignatureEngine(SeifertData sd, mpfr_prec_t precision_cap = 4096)
      : sd_(std::move(sd)), cap_(precision_cap) {}

  const SeifertData& data() const { return sd_; }

  SignatureTriple tristram_levine(long j, unsigned long k) {
    if (k == 0) throw OutOfRange("cover index must be >= 1");
    long jr = j % (long)k;
    if (jr < 0) jr += (long)k;
    if (jr == 0) throw InvalidRoot();
    unsigned long a = (unsigned long)jr;
    unsigned long m = k;
    unsigned long g = std::gcd(a, m);
    a /= g;
    m /= g;
    if (sd_.mu() == 0) return {};
    if (2 * a > m) a = m - a;
    const auto key = std::make_pair(a, m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    SignatureTriple r = evaluate(a, m);
    memo_.emplace(key, r);
    return r;
  }

  CoverSignature cover_signature(unsigned long k) {
    if (k == 0) throw OutOfRange("cover index must be >= 1");
    if (!fibered()) throw NotFibered();
    if (sd_.n % 2 == 0) return {0, false};
    long total = 0;
    for (unsigned long j = 1; j < k; ++j) total += tristram_levine((long)j, k).sigma();
    return {total, true};
  }

 private:
  bool fibered() {
    if (!fibered_) fibered_ = is_fibered(sd_);
    return *fibered_;
  }

  const IntMatrix& pencil() {
    if (!pencil_) {
      RatMatrix p = inverse(to_rational(sd_.L)) * to_rational(sd_.L.transpose());
      auto z = to_integral(p);
      if (!z) throw NotFibered("monodromy is not integral");
      pencil_ = std::move(*z);
    }
    return *pencil_;
  }

  const IntPoly& pencil_char_poly() {
    if (!charpoly_) charpoly_ = detail::char_poly_crt(pencil());
    return *charpoly_;
  }

  unsigned long alg_mult(unsigned long m) {
    auto it = alg_mult_.find(m);
    if (it != alg_mult_.end()) return it->second;
    const IntPoly phi = cyclotomic_polynomial(m);
    IntPoly p = pencil_char_poly();
    unsigned long mult = 0;
    while (poly_is_zero(poly_rem_monic(p, phi))) {
      p = poly_div_exact_monic(p, phi);
      ++mult;
    }
    alg_mult_.emplace(m, mult);
    return mult;
  }

  std::size_t nullity(unsigned long m) {
    auto it = null_.find(m);
    if (it != null_.end()) return it->second;
    const unsigned long am = alg_mult(m);
    std::size_t nl = am;
    if (am >= 2) {
      const IntPoly phi = cyclotomic_polynomial(m);
      const IntMatrix& mx = pencil();
      const std::size_t mu = sd_.mu();
      IntMatrix p(mu, mu);
      for (std::size_t i = 0; i < mu; ++i) p(i, i) = phi.back();
      for (std::size_t c = phi.size() - 1; c-- > 0;) {
        p = p * mx;
        for (std::size_t i = 0; i < mu; ++i) p(i, i) += phi[c];
      }
      const std::size_t defect = mu - detail::rank_bareiss(std::move(p));
      const std::size_t totient = poly_degree(phi);
      if (defect % totient != 0) throw Error("eigenspace dimension is not Galois-stable");
      nl = defect / totient;
    }
    null_.emplace(m, nl);
    return nl;
  }

  SignatureTriple evaluate(unsigned long a, unsigned long m) {
    if (m == 2) return signature_symmetric(to_rational(sd_.L + sd_.L.transpose()));
    const std::size_t mu = sd_.mu();
    {
      auto b = detail::hermitian_form_double(sd_.L, a, m);
      if (auto r = detail::hermitian_inertia_core(b, mu)) return *r;
    }
    const std::size_t target = mu - nullity(m);
    for (mpfr_prec_t prec = 128; prec <= cap_; prec *= 2) {
      auto b = detail::hermitian_form_mpfr(sd_.L, a, m, prec);
      if (auto r = detail::hermitian_inertia_core(b, target)) return *r;
    }
    throw PrecisionExhausted();
  }

  SeifertData sd_;
  mpfr_prec_t cap_;
  std::optional<bool> fibered_;
  std::optional<IntMatrix> pencil_;
  std::optional<IntPoly> charpoly_;
  std::map<unsigned long, unsigned long> alg_mult_;
  std::map<unsigned long, std::size_t> null_;
  std::map<std::pair<unsigned long, unsigned long>, SignatureTriple> memo_;
};

inline SignatureTriple tristram_levine_signature(const SeifertData& sd, long j,
                                                 unsigned long k,
                                                 mpfr_prec_t precision_cap = 4096) {
  CoverSignatureEngine engine(sd, precision_cap);
  return engine.tristram_levine(j, k);
}

inline CoverSignature cover_signature(const SeifertData& sd, unsigned long k,
                                      mpfr_prec_t precision_cap = 4096) {
  CoverSignatureEngine engine(sd, precision_cap);
  return engine.cover_signature(k);
}

}  // namespace openbook
