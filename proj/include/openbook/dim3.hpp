#pragma once

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "openbook/abelian.hpp"
#include "openbook/brieskorn.hpp"
#include "openbook/errors.hpp"
#include "openbook/matrix.hpp"
#include "openbook/seifert.hpp"
#include "openbook/smith.hpp"

namespace openbook {

// Relators are words in signed 1-based generator indices: +i stands for the
// i-th generator, -i for its inverse.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<long>> relators;
  bool extrapolated = false;  // presentation extended beyond the recorded case

  void validate() const {
    for (const auto& word : relators)
      for (long idx : word) {
        if (idx == 0 || (std::size_t)std::labs(idx) > generators.size())
          throw OutOfRange("relator references a nonexistent generator");
      }
  }
};

inline AbelianGroup abelianization(const GroupPresentation& p) {
  p.validate();
  IntMatrix rel(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (long idx : p.relators[r]) {
      std::size_t g = (std::size_t)std::labs(idx) - 1;
      rel(r, g) += idx > 0 ? 1 : -1;
    }
  return cokernel_structure(rel);
}

// pi_1 of the k-fold cover of S^3 branched along the trefoil: generators
// Z_1..Z_k, cyclic relators Z_j = Z_{j-1} Z_{j+1}. The k = 6 presentation is
// the recorded one; other k follow the same pattern and are flagged.
inline GroupPresentation pi1_Mk_presentation(unsigned long k) {
  if (k == 0) throw OutOfRange("cover index must be >= 1");
  GroupPresentation p;
  p.extrapolated = k != 6;
  for (unsigned long j = 1; j <= k; ++j) p.generators.push_back("Z_" + std::to_string(j));
  for (unsigned long j = 1; j <= k; ++j) {
    long prev = (long)(j == 1 ? k : j - 1);
    long next = (long)(j == k ? 1 : j + 1);
    p.relators.push_back({-(long)j, prev, next});
  }
  return p;
}

enum class TriangleGroupStatus { finite, infinite };

inline const char* triangle_status_name(TriangleGroupStatus s) {
  return s == TriangleGroupStatus::finite ? "finite" : "infinite";
}

// Gamma(p,q,r) is infinite exactly when 1/p + 1/q + 1/r <= 1.
inline TriangleGroupStatus triangle_group_status(unsigned long p, unsigned long q,
                                                 unsigned long r) {
  if (p < 2 || q < 2 || r < 2) throw OutOfRange("triangle group indices must be >= 2");
  Rat s = Rat(1, p) + Rat(1, q) + Rat(1, r);
  s.canonicalize();
  return s <= 1 ? TriangleGroupStatus::infinite : TriangleGroupStatus::finite;
}

// A closed smooth spin 4-manifold has signature divisible by 16.
inline bool rokhlin_obstruction(long sigma) {
  return sigma % 16 == 0;
}

inline SeifertData trefoil_seifert() {
  return SeifertData(IntMatrix{{-1, 1}, {0, -1}}, 1);
}

struct TrefoilReport {
  unsigned long d = 0;
  long sigma_N7 = 0;
  bool rokhlin_passes = false;
  std::vector<AbelianGroup> H1_Mk;      // index i holds k = i+1
  std::vector<AbelianGroup> ab_pi1_Mk;  // same indexing
  std::vector<std::pair<unsigned long, TriangleGroupStatus>> triangle;  // r = 3..9
  std::string conclusion;
};

inline TrefoilReport trefoil_report(mpfr_prec_t precision_cap = 4096) {
  SeifertData sd = trefoil_seifert();
  TrefoilReport rep;

  auto d = min_trivializing_power(sd, 64);
  if (!d) throw Error("trefoil monodromy order not found below 64");
  rep.d = *d;

  long tl = cover_signature(sd, 7, precision_cap).value;
  long lattice = cover_signature_lattice(BrieskornData({2, 3}), 7).value;
  if (tl != lattice)
    throw OracleMismatch("sigma(N_7): Tristram-Levine sum " + std::to_string(tl) +
                         " vs lattice count " + std::to_string(lattice));
  rep.sigma_N7 = tl;
  rep.rokhlin_passes = rokhlin_obstruction(rep.sigma_N7);

  for (unsigned long k = 1; k <= 8; ++k) {
    rep.H1_Mk.push_back(cover_homology(sd, k).h_n);
    rep.ab_pi1_Mk.push_back(abelianization(pi1_Mk_presentation(k)));
    if (rep.H1_Mk.back() != rep.ab_pi1_Mk.back())
      throw OracleMismatch("H_1(M_" + std::to_string(k) +
                           "): Stevens cokernel disagrees with the presentation "
                           "abelianization");
  }
  for (unsigned long r = 3; r <= 9; ++r)
    rep.triangle.emplace_back(r, triangle_group_status(2, 3, r));

  rep.conclusion = "no topological periodicity in dimension 3";
  return rep;
}

}  // namespace openbook
