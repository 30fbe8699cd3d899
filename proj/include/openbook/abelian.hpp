#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "openbook/matrix.hpp"

namespace openbook {

// Finitely generated abelian group in invariant-factor form:
// Z^free_rank + Z_{t_0} + Z_{t_1} + ... with t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_free() const { return torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;

  std::string to_string() const {
    std::string s;
    if (free_rank == 1) s = "Z";
    else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
    for (const Int& t : torsion) {
      if (!s.empty()) s += " (+) ";
      s += "Z_" + t.get_str();
    }
    return s.empty() ? "0" : s;
  }
};

// Rewrites an arbitrary list of cyclic orders into a divisibility chain.
inline AbelianGroup normalized_group(std::size_t free_rank, std::vector<Int> orders) {
  std::erase_if(orders, [](const Int& t) { return t == 1; });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t j = i + 1; j < orders.size(); ++j) {
        Int g = gcd(orders[i], orders[j]);
        if (orders[i] % orders[j] == 0 || orders[j] % orders[i] == 0) continue;
        Int l = orders[i] / g * orders[j];
        orders[i] = g;
        orders[j] = l;
        changed = true;
      }
  }
  std::erase_if(orders, [](const Int& t) { return t == 1; });
  std::sort(orders.begin(), orders.end());
  return AbelianGroup{free_rank, std::move(orders)};
}

inline AbelianGroup direct_power(const AbelianGroup& g, std::size_t mu) {
  std::vector<Int> orders;
  orders.reserve(g.torsion.size() * mu);
  for (std::size_t i = 0; i < mu; ++i)
    orders.insert(orders.end(), g.torsion.begin(), g.torsion.end());
  return normalized_group(g.free_rank * mu, std::move(orders));
}

}  // namespace openbook
