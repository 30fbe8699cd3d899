#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "openbook/abelian.hpp"
#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"

namespace openbook {

// S*pi_n(SO(n)), 8-periodic in n except for the isolated zero at n = 6.
inline AbelianGroup s_pi_n_so_n(unsigned long n) {
  if (n < 3) throw OutOfRange("the S pi_n(SO(n)) table starts at n = 3");
  if (n == 6) return {};
  switch (n % 8) {
    case 0: return {0, {2, 2}};
    case 1: return {0, {2}};
    case 2: return {0, {2}};
    case 3: return {1, {}};
    case 4: return {0, {2}};
    case 5: return {};
    case 6: return {0, {2}};
    default: return {1, {}};
  }
}

// |B_{2m}| in the indexing used by the order formulas: bernoulli(1) = 1/6,
// bernoulli(2) = 1/30, bernoulli(3) = 1/42. Internally the classical
// recurrence sum_{j<=k} C(k+1,j) b_j = 0 with b_0 = 1.
inline Rat bernoulli(unsigned long m) {
  if (m == 0) throw OutOfRange("Bernoulli index must be >= 1");
  const unsigned long top = 2 * m;
  std::vector<Rat> b(top + 1);
  b[0] = 1;
  for (unsigned long k = 1; k <= top; ++k) {
    Rat s = 0;
    Int c = 1;
    for (unsigned long j = 0; j < k; ++j) {
      s += Rat(c) * b[j];
      c = c * Int(k + 1 - j) / Int(j + 1);
    }
    b[k] = -s / Rat(k + 1);
  }
  Rat v = b[top];
  if (v < 0) v = -v;
  return v;
}

// The dimensions 4m+2 where bP is trivial rather than Z_2 are an external
// input (tied to the Kervaire invariant); the set is configurable and
// defaults to the known list. Dimensions placed in unknown_dims report no
// order at all.
struct BpConfig {
  std::vector<unsigned long> trivial_dims{6, 14, 30, 62, 126};
  std::vector<unsigned long> unknown_dims{};
};

inline std::optional<Int> bp_order(unsigned long dim, const BpConfig& cfg = {}) {
  if (dim % 2 == 1 || dim < 6) throw OutOfRange("bP order is defined for even dim >= 6");
  if (dim % 4 == 0) {
    const unsigned long m = dim / 4;
    Rat q = bernoulli(m) * 4;
    q /= Rat(m);
    q.canonicalize();
    Int num = abs(q.get_num());
    return (Int(1) << (2 * m - 2)) * ((Int(1) << (2 * m - 1)) - 1) * num;
  }
  auto contains = [&](const std::vector<unsigned long>& v) {
    return std::find(v.begin(), v.end(), dim) != v.end();
  };
  if (contains(cfg.unknown_dims)) return std::nullopt;
  return Int(contains(cfg.trivial_dims) ? 1 : 2);
}

// Hom(H_n(F, dF), G) = G^mu for G = S pi_n(SO(n)), in invariant-factor form.
inline AbelianGroup hom_part(unsigned long n, std::size_t mu) {
  return direct_power(s_pi_n_so_n(n), mu);
}

enum class Split { yes, no, unknown };

inline const char* split_name(Split s) {
  switch (s) {
    case Split::yes: return "yes";
    case Split::no: return "no";
    default: return "unknown";
  }
}

// 0 -> Theta_{2n+1} -> K(V) -> Hom(H_n(F,dF), G) -> 0. The kernel is kept
// symbolic except where its value is on record (Theta_7 = Z_28, and the
// n = 2 collapse K(V) = 0); splitness is reported conservatively.
struct ExtensionDesc {
  std::string kernel_name;
  std::optional<AbelianGroup> kernel_value;
  AbelianGroup quotient;
  Split split = Split::unknown;
  std::string note;
  std::optional<AbelianGroup> total;  // K(V) itself when determined
};

inline ExtensionDesc kernel_var_structure(unsigned long n, std::size_t mu,
                                          const BpConfig& cfg = {}) {
  if (n < 2) throw OutOfRange("n must be >= 2");
  ExtensionDesc out;
  out.kernel_name = "Theta_" + std::to_string(2 * n + 1);
  if (n == 2) {
    out.kernel_value = AbelianGroup{};
    out.quotient = AbelianGroup{};
    out.split = Split::yes;
    out.note = "K(V) = 0 when n = 2";
    out.total = AbelianGroup{};
    return out;
  }
  out.quotient = hom_part(n, mu);
  if (n == 3) out.kernel_value = AbelianGroup{0, {28}};

  if (out.quotient.is_free()) {
    out.split = Split::yes;
    out.note = "free quotient lifts, so the sequence splits";
    if (out.kernel_value) {
      std::vector<Int> torsion = out.kernel_value->torsion;
      torsion.insert(torsion.end(), out.quotient.torsion.begin(), out.quotient.torsion.end());
      out.total = normalized_group(out.kernel_value->free_rank + out.quotient.free_rank,
                                   std::move(torsion));
    }
    return out;
  }
  auto bp = bp_order(2 * n + 2, cfg);
  if (mu == 1 && n % 2 == 0 && (n / 2) % 4 != 0 && bp && *bp == 2) {
    out.split = Split::no;
    out.note =
        "A_1 family with n = 2m, m not divisible by 4, and exotic Kervaire "
        "sphere: the sequence does not split";
    return out;
  }
  out.note = "splitness not determined by the recorded cases";
  return out;
}

}  // namespace openbook
