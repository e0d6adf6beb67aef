#pragma once

#include <cstddef>
#include <vector>

#include "qf/permgroup.hpp"
#include "qf/validation.hpp"

namespace qf {

inline constexpr int kGroupOrderCap = 255;

ValidationReport validate_group(const std::vector<std::vector<int>>& mult);

/// Finite group as a full multiplication table. Elements are 0..n-1.
class FiniteGroup {
 public:
  /// Validates the table; throws MalformedTable / MalformedInput.
  static FiniteGroup from_table(std::vector<std::vector<int>> mult);

  /// Closes permutation generators into a multiplication table.
  /// Element 0 is the identity; elements are ordered by first discovery
  /// in a breadth-first closure, which is deterministic.
  static FiniteGroup from_permutation_generators(int degree,
                                                 const std::vector<Perm>& gens,
                                                 int order_cap = kGroupOrderCap);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return mult_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  const std::vector<std::vector<int>>& table() const { return mult_; }

  /// h^{-1} g h
  int conjugate(int g, int h) const { return mul(mul(inv(h), g), h); }

  /// {h^{-1} m h : h in G}, sorted.
  std::vector<int> conjugacy_class(int m) const;

  /// Centralizer of m in G, as a sorted element set.
  std::vector<int> centralizer(int m) const;

 private:
  FiniteGroup() = default;
  int n_ = 0;
  std::vector<std::vector<int>> mult_;
  int e_ = 0;
  std::vector<int> inv_;
};

/// Subgroup of a fixed parent, stored as a sorted element set.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted

  bool contains(int g) const;
  int order() const { return static_cast<int>(elements.size()); }
};

/// Smallest subgroup containing gens (and the identity).
Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens);

/// {a in P : ap = pa for all p in P}
Subgroup center_of_subgroup(const FiniteGroup& G, const Subgroup& P);

/// Right coset decomposition of P\G. Coset 0 is P itself with the identity
/// as representative; remaining cosets are ordered by smallest element,
/// which is also their representative.
struct CosetDecomposition {
  std::vector<int> representatives;
  std::vector<int> coset_of;  // element index -> coset index

  int count() const { return static_cast<int>(representatives.size()); }
};

CosetDecomposition right_cosets(const FiniteGroup& G, const Subgroup& P);

/// All subgroups of G, each as a sorted element set; deterministic order.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);

}  // namespace qf
