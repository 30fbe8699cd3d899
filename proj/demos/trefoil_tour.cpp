// Walk through the dimension-3 story: the trefoil's monodromy has order six
// and Var(phi^6) = 0, yet no two of M_0..M_6 agree topologically.
#include <iostream>

#include "openbook/openbook.hpp"

using namespace openbook;

int main() {
  SeifertData trefoil = trefoil_seifert();
  OpenBookInvariants inv = invariants(trefoil);

  std::cout << "Seifert matrix L = [[-1, 1], [0, -1]], n = 1\n";
  std::cout << "intersection form S = [[" << inv.S(0, 0) << ", " << inv.S(0, 1) << "], ["
            << inv.S(1, 0) << ", " << inv.S(1, 1) << "]]\n";

  IntPoly chi = char_poly(inv.h);
  std::cout << "char poly of the monodromy: " << chi[0] << " + " << chi[1] << " t + " << chi[2]
            << " t^2\n";

  auto d = min_trivializing_power(trefoil, 12);
  std::cout << "smallest d with Var(phi^d) = 0: " << *d << "\n\n";

  std::cout << "homology of the branched covers (Stevens sequence):\n";
  for (unsigned long k = 1; k <= 8; ++k) {
    CoverHomology h = cover_homology(trefoil, k);
    std::cout << "  H_1(M_" << k << ") = " << h.h_n.to_string() << "\n";
  }

  std::cout << "\ncover signatures (Tristram-Levine sums):\n";
  for (unsigned long k = 2; k <= 7; ++k)
    std::cout << "  sigma_" << k << " = " << cover_signature(trefoil, k).value << "\n";

  long s7 = cover_signature(trefoil, 7).value;
  std::cout << "\nsigma_7 = " << s7 << " is not a multiple of 16, so M_7 is not S^3 "
            << "(Rokhlin), despite Var(phi^7) = Var(phi)\n";

  std::cout << "pi_1 obstructions: the (2,3,r) triangle group is "
            << triangle_status_name(triangle_group_status(2, 3, 7))
            << " for r = 7, so large covers are never simply connected\n";
  return 0;
}
