#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qf/group.hpp"
#include "qf/permgroup.hpp"
#include "qf/validation.hpp"

namespace qf {

inline constexpr int kQuandleEnumCap = 5;
inline constexpr std::size_t kDefaultSearchBudget = 10000000;

/// Finite quandle as a dense operation table, table[a][b] = a^b.
struct FiniteQuandle {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::vector<std::string> labels;  // optional, display only

  int op(int a, int b) const { return table[a][b]; }

  /// Column permutation sigma_b : a -> a^b.
  Perm column(int b) const;
  /// Inverse column, the left inverse of the operation.
  Perm column_inv(int b) const;
};

/// Checks idempotence, left invertibility and right self-distributivity.
/// Each violated axiom is reported once with a minimal witness.
ValidationReport validate_quandle(const std::vector<std::vector<int>>& table);

FiniteQuandle make_trivial(int n);

/// a^b = (2b - a) mod n
FiniteQuandle make_dihedral(int n);

/// Conjugation quandle on the conjugacy class of class_rep, x^y = y^{-1}xy.
/// Elements are the class members in sorted order; labels carry the group
/// element indices.
FiniteQuandle make_conjugation(const FiniteGroup& G, int class_rep);

/// Group generated by the column permutations.
PermutationGroup inner_group(const FiniteQuandle& Q);

std::vector<std::vector<int>> orbits(const FiniteQuandle& Q);

/// All maps f with f(a^b) = f(a)^f(b), in lexicographic order of the image
/// tuple. Throws SearchBudgetExceeded past node_budget search nodes.
std::vector<std::vector<int>> enumerate_homs(const FiniteQuandle& source,
                                             const FiniteQuandle& target,
                                             std::size_t node_budget = kDefaultSearchBudget);

/// Witness map is the lexicographically first isomorphism when one exists.
std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& Q1,
                                                 const FiniteQuandle& Q2);
bool are_isomorphic(const FiniteQuandle& Q1, const FiniteQuandle& Q2);

/// All quandles of order n up to isomorphism, deterministic order.
std::vector<FiniteQuandle> enumerate_quandles(int n, int order_cap = kQuandleEnumCap);

}  // namespace qf
