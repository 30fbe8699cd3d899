// High-dimensional periodicity: sphere offsets and periods for Brieskorn
// examples, and the A_1 table of diffeomorphism types.
#include <iostream>

#include "openbook/openbook.hpp"

using namespace openbook;

static void show(const char* title, const BrieskornData& bd) {
  PeriodicityReport rep = analyze(bd, 64);
  std::cout << title << ": n = " << rep.n << ", mu = " << rep.mu;
  if (rep.d) std::cout << ", d = " << *rep.d;
  else std::cout << ", d = absent";
  if (rep.sigma_d) std::cout << ", sigma_d = " << *rep.sigma_d;
  if (rep.sphere_offset) std::cout << ", offset = " << rep.sphere_offset->get_str();
  if (rep.homeo_period) std::cout << ", homeo period = " << rep.homeo_period->get_str();
  if (rep.diffeo_period) std::cout << ", diffeo period = " << rep.diffeo_period->get_str();
  std::cout << "\n";
}

int main() {
  std::cout << "bP orders: |bP_8| = " << bp_order(8)->get_str()
            << ", |bP_12| = " << bp_order(12)->get_str()
            << ", |bP_14| = " << bp_order(14)->get_str() << "\n\n";

  show("A_1 in five variables, (2,2,2,2,2)", BrieskornData({2, 2, 2, 2, 2}));
  show("(2,2,2,3), covers offset by an exotic 7-sphere", BrieskornData({2, 2, 2, 3}));
  show("(3,3), eigenvalue one blocks the certificate", BrieskornData({3, 3}));
  show("A_1 in three variables, (2,2,2)", BrieskornData({2, 2, 2}));

  std::cout << "\nA_1 diffeomorphism types (n even), 8-periodic in k:\n";
  for (unsigned long k = 1; k <= 8; ++k)
    std::cout << "  M_" << k << ": " << a1_label_name(a1_table(k).label) << "\n";

  std::cout << "\nK(V) for the S^3 x D^3 page (n = 3, mu = 1): "
            << kernel_var_structure(3, 1).total->to_string() << "\n";
  return 0;
}
