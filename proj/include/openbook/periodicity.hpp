#pragma once

#include <optional>
#include <string>
#include <vector>

#include "openbook/brieskorn.hpp"
#include "openbook/errors.hpp"
#include "openbook/groups.hpp"
#include "openbook/seifert.hpp"

namespace openbook {

enum class ParityCase { odd_n, even_n, n_eq_2_or_6, n_eq_1_excluded };

inline const char* parity_case_name(ParityCase p) {
  switch (p) {
    case ParityCase::odd_n: return "odd_n";
    case ParityCase::even_n: return "even_n";
    case ParityCase::n_eq_2_or_6: return "n_eq_2_or_6";
    default: return "n_eq_1_excluded";
  }
}

struct PeriodicityReport {
  unsigned long n = 0;
  std::size_t mu = 0;
  std::optional<unsigned long> d;
  ParityCase parity_case = ParityCase::odd_n;
  std::optional<Int> homeo_period;
  std::optional<Int> diffeo_period;
  std::optional<long> sigma_d;
  std::optional<Int> sphere_offset;
  std::string notes;
};

// (sigma_d / 8) mod |bP_dim|, normalized to [0, order).
inline Int sphere_offset(long sigma_d, unsigned long dim, const BpConfig& cfg = {}) {
  if (sigma_d % 8 != 0) throw SignatureNotMultipleOf8();
  auto order = bp_order(dim, cfg);
  if (!order) throw Error("bP order unknown at this dimension");
  Int off = Int(sigma_d / 8) % *order;
  if (off < 0) off += *order;
  return off;
}

namespace detail {

inline void append_note(std::string& notes, const std::string& extra) {
  if (!notes.empty()) notes += "; ";
  notes += extra;
}

inline std::string reversal_pairs_note(unsigned long d) {
  std::string s = "orientation-reversing homeomorphic pairs:";
  bool first = true;
  for (unsigned long k = 1; 2 * k <= d; ++k) {
    s += first ? " " : ", ";
    s += "M_" + std::to_string(k) + " <-> M_" + std::to_string(d - k);
    first = false;
  }
  if (first) s += " none";
  return s;
}

// lattice_source non-null for Brieskorn input: sigma_d is then computed by
// both routes and any disagreement is a hard error.
inline PeriodicityReport analyze_impl(const SeifertData& sd, unsigned long d_max,
                                      mpfr_prec_t precision_cap,
                                      const BrieskornData* lattice_source) {
  PeriodicityReport rep;
  rep.n = sd.n;
  rep.mu = sd.mu();
  if (sd.n == 1) {
    rep.parity_case = ParityCase::n_eq_1_excluded;
    rep.d = min_trivializing_power(sd, d_max);
    rep.notes = "n = 1 is excluded: no topological periodicity in dimension 3";
    return rep;
  }
  if (sd.n % 2 == 1) rep.parity_case = ParityCase::odd_n;
  else if (sd.n == 2 || sd.n == 6) rep.parity_case = ParityCase::n_eq_2_or_6;
  else rep.parity_case = ParityCase::even_n;

  rep.d = min_trivializing_power(sd, d_max);
  if (!rep.d) {
    rep.notes = "no periodicity certificate: no d <= " + std::to_string(d_max) +
                " has Var(phi^d) = 0";
    return rep;
  }
  const unsigned long d = *rep.d;

  if (rep.parity_case == ParityCase::odd_n) {
    rep.homeo_period = Int(d);
    long sigma = cover_signature(sd, d, precision_cap).value;
    if (lattice_source) {
      if (d >= 2) {
        long lattice = cover_signature_lattice(*lattice_source, d).value;
        if (lattice != sigma)
          throw OracleMismatch("sigma_" + std::to_string(d) + ": Tristram-Levine sum " +
                               std::to_string(sigma) + " vs lattice count " +
                               std::to_string(lattice));
      }
      append_note(rep.notes, "sigma_d agreed between the Tristram-Levine and lattice oracles");
    }
    rep.sigma_d = sigma;
    const unsigned long dim = 2 * sd.n + 2;
    auto order = bp_order(dim);
    if (!order) {
      append_note(rep.notes, "bP order unknown in dimension " + std::to_string(dim));
    } else {
      Int off = sphere_offset(sigma, dim);
      rep.sphere_offset = off;
      Int additive_order = *order / gcd(off, *order);
      rep.diffeo_period = Int(d) * additive_order;
    }
  } else {
    rep.homeo_period = Int(2 * d);
    rep.diffeo_period = Int(4 * d);
    if (rep.parity_case == ParityCase::n_eq_2_or_6)
      append_note(rep.notes,
                  "n = 2 or 6: M_k and M_{k+d} are already diffeomorphic, improving the "
                  "period to d = " + std::to_string(d));
  }
  append_note(rep.notes, reversal_pairs_note(d));
  append_note(rep.notes, "periodicity extends to all integers k, not only k >= 1");
  return rep;
}

}  // namespace detail

inline PeriodicityReport analyze(const SeifertData& sd, unsigned long d_max = 64,
                                 mpfr_prec_t precision_cap = 4096) {
  return detail::analyze_impl(sd, d_max, precision_cap, nullptr);
}

inline PeriodicityReport analyze(const BrieskornData& bd, unsigned long d_max = 64,
                                 mpfr_prec_t precision_cap = 4096) {
  SeifertData sd = seifert_matrix(bd);
  return detail::analyze_impl(sd, d_max, precision_cap, &bd);
}

enum class A1Label {
  StandardSphere,
  TangentBundleT,
  KervaireSphere,
  SnxSn1_connsum_Sigma,
  T_connsum_Sigma,
  SnxSn1
};

inline const char* a1_label_name(A1Label l) {
  switch (l) {
    case A1Label::StandardSphere: return "StandardSphere";
    case A1Label::TangentBundleT: return "TangentBundleT";
    case A1Label::KervaireSphere: return "KervaireSphere";
    case A1Label::SnxSn1_connsum_Sigma: return "SnxSn1_connsum_Sigma";
    case A1Label::T_connsum_Sigma: return "T_connsum_Sigma";
    default: return "SnxSn1";
  }
}

struct A1TableEntry {
  unsigned long k_mod_8 = 0;
  A1Label label = A1Label::StandardSphere;
};

// Diffeomorphism type of the k-fold cover for the A_1 singularity with n
// even (n = 2m, m odd context): 8-periodic table.
inline A1TableEntry a1_table(unsigned long k) {
  if (k == 0) throw OutOfRange("cover index must be >= 1");
  const unsigned long r = k % 8;
  switch (r) {
    case 1:
    case 7: return {r, A1Label::StandardSphere};
    case 2: return {r, A1Label::TangentBundleT};
    case 3:
    case 5: return {r, A1Label::KervaireSphere};
    case 4: return {r, A1Label::SnxSn1_connsum_Sigma};
    case 6: return {r, A1Label::T_connsum_Sigma};
    default: return {r, A1Label::SnxSn1};
  }
}

// Underlying topological type, forgetting the exotic-sphere summand: entries
// at k and k+4 fall in the same class.
inline const char* a1_homeo_class(A1Label l) {
  switch (l) {
    case A1Label::StandardSphere:
    case A1Label::KervaireSphere: return "sphere";
    case A1Label::TangentBundleT:
    case A1Label::T_connsum_Sigma: return "T";
    default: return "SnxSn1";
  }
}

}  // namespace openbook
