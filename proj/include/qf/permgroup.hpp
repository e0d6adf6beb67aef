#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace qf {

using Perm = std::vector<int>;  // image table, p[i] = image of i

bool is_permutation(const Perm& p);
Perm identity_perm(int degree);
Perm compose(const Perm& p, const Perm& q);  // apply p first, then q
Perm inverse_perm(const Perm& p);

/// Permutation group given by generators on {0..degree-1}. The element
/// closure is computed lazily by naive product closure, bounded by a cap.
class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Perm> generators,
                   std::size_t element_cap = 1000000);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  const std::vector<Perm>& elements() const;  // sorted, deterministic
  std::size_t order() const { return elements().size(); }
  bool contains(const Perm& p) const;

  /// Orbit partition of {0..degree-1}; orbits sorted by smallest element.
  std::vector<std::vector<int>> orbits() const;

 private:
  int degree_;
  std::vector<Perm> gens_;
  std::size_t element_cap_;
  mutable std::optional<std::vector<Perm>> elements_;
};

}  // namespace qf
