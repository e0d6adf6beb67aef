#pragma once

#include <string>
#include <vector>

#include "qf/group.hpp"

namespace qf::testing {

inline FiniteGroup make_cyclic(int n) {
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mult[a][b] = (a + b) % n;
  return FiniteGroup::from_table(std::move(mult));
}

inline FiniteGroup make_s3() {
  return FiniteGroup::from_permutation_generators(3, {{1, 0, 2}, {1, 2, 0}});
}

inline FiniteGroup make_s4() {
  return FiniteGroup::from_permutation_generators(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
}

inline FiniteGroup make_a4() {
  return FiniteGroup::from_permutation_generators(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
}

inline FiniteGroup make_d4() {  // symmetries of a square
  return FiniteGroup::from_permutation_generators(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
}

inline FiniteGroup make_q8() {
  // left multiplication by i and j on {1,-1,i,-i,j,-j,k,-k}
  return FiniteGroup::from_permutation_generators(
      8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}});
}

inline int element_order(const FiniteGroup& G, int g) {
  int order = 1, x = g;
  while (x != G.identity()) {
    x = G.mul(x, g);
    ++order;
  }
  return order;
}

/// first element of the given order; -1 when absent
inline int element_of_order(const FiniteGroup& G, int order) {
  for (int g = 0; g < G.order(); ++g)
    if (element_order(G, g) == order) return g;
  return -1;
}

inline const std::string kTrefoil = "U1+ O2+ U3+ O1+ U2+ O3+";
inline const std::string kFigureEight = "U1+ O2+ U3- O4- U2+ O1+ U4- O3-";
inline const std::string kVirtualTrefoil = "flavor=virtual; O1+ U2+ O2+ U1+";
inline const std::string kUnknot = "";
inline const std::string kTrefoilArc = "arc; U1+ O2+ U3+ O1+ U2+ O3+";
inline const std::string kTrefoilKink = "U1+ O2+ U3+ O1+ U2+ O3+ O4- U4-";
inline const std::string kTrefoilR2 = "U1+ O2+ U3+ O1+ U2+ O3+ O4+ O5- U5- U4+";

}  // namespace qf::testing
