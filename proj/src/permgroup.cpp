#include "qf/permgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qf/errors.hpp"

namespace qf {

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

PermutationGroup::PermutationGroup(int degree, std::vector<Perm> generators,
                                   std::size_t element_cap)
    : degree_(degree), gens_(std::move(generators)), element_cap_(element_cap) {
  for (const Perm& g : gens_) {
    if (static_cast<int>(g.size()) != degree_ || !is_permutation(g))
      throw MalformedInput("generator is not a permutation of the stated degree");
  }
}

const std::vector<Perm>& PermutationGroup::elements() const {
  if (elements_) return *elements_;
  std::set<Perm> closure;
  closure.insert(identity_perm(degree_));
  std::vector<Perm> frontier(closure.begin(), closure.end());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& g : gens_) {
        Perm y = compose(x, g);
        if (closure.insert(y).second) next.push_back(std::move(y));
      }
    }
    if (closure.size() > element_cap_)
      throw OrderCapExceeded("permutation group closure exceeded element cap");
    frontier = std::move(next);
  }
  elements_ = std::vector<Perm>(closure.begin(), closure.end());
  return *elements_;
}

bool PermutationGroup::contains(const Perm& p) const {
  const auto& els = elements();
  return std::binary_search(els.begin(), els.end(), p);
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<std::vector<int>> result;
  std::vector<char> done(degree_, 0);
  for (int start = 0; start < degree_; ++start) {
    if (done[start]) continue;
    std::vector<int> orbit{start};
    done[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Perm& g : gens_) {
        int y = g[x];
        if (!done[y]) {
          done[y] = 1;
          orbit.push_back(y);
          stack.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

}  // namespace qf
