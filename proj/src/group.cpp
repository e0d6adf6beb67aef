#include "qf/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qf/errors.hpp"

namespace qf {

namespace {

void check_square(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) throw MalformedTable("empty multiplication table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw MalformedTable("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
  }
}

}  // namespace

ValidationReport validate_group(const std::vector<std::vector<int>>& mult) {
  check_square(mult);
  int n = static_cast<int>(mult.size());
  ValidationReport report;

  // identity: two-sided, unique if it exists
  int e = -1;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int a = 0; a < n; ++a)
      if (mult[c][a] != a || mult[a][c] != a) { ok = false; break; }
    if (ok) { e = c; break; }
  }
  if (e < 0) {
    report.violations.push_back({"identity", {}});
    return report;
  }

  for (int a = 0; a < n; ++a) {
    bool has_inv = false;
    for (int b = 0; b < n; ++b)
      if (mult[a][b] == e && mult[b][a] == e) { has_inv = true; break; }
    if (!has_inv) {
      report.violations.push_back({"inverse", {a}});
      break;
    }
  }

  for (int a = 0; a < n && report.valid(); ++a)
    for (int b = 0; b < n && report.valid(); ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          report.violations.push_back({"associativity", {a, b, c}});
          break;
        }
  return report;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mult) {
  if (static_cast<int>(mult.size()) > kGroupOrderCap)
    throw OrderCapExceeded("group order exceeds table cap");
  ValidationReport report = validate_group(mult);
  if (!report.valid())
    throw MalformedTable("table is not a group: " + report.violations[0].axiom);

  FiniteGroup G;
  G.n_ = static_cast<int>(mult.size());
  G.mult_ = std::move(mult);
  for (int c = 0; c < G.n_; ++c) {
    bool ok = true;
    for (int a = 0; a < G.n_; ++a)
      if (G.mult_[c][a] != a || G.mult_[a][c] != a) { ok = false; break; }
    if (ok) { G.e_ = c; break; }
  }
  G.inv_.assign(G.n_, 0);
  for (int a = 0; a < G.n_; ++a)
    for (int b = 0; b < G.n_; ++b)
      if (G.mult_[a][b] == G.e_ && G.mult_[b][a] == G.e_) { G.inv_[a] = b; break; }
  return G;
}

FiniteGroup FiniteGroup::from_permutation_generators(int degree,
                                                     const std::vector<Perm>& gens,
                                                     int order_cap) {
  for (const Perm& g : gens)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw MalformedInput("bad permutation generator");

  std::vector<Perm> elements{identity_perm(degree)};
  std::map<Perm, int> index{{elements[0], 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& g : gens) {
      Perm y = compose(elements[i], g);
      if (index.emplace(y, static_cast<int>(elements.size())).second) {
        elements.push_back(std::move(y));
        if (static_cast<int>(elements.size()) > order_cap)
          throw OrderCapExceeded("permutation closure exceeds group order cap");
      }
    }
  }
  int n = static_cast<int>(elements.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mult[a][b] = index.at(compose(elements[a], elements[b]));
  return from_table(std::move(mult));
}

std::vector<int> FiniteGroup::conjugacy_class(int m) const {
  std::set<int> cls;
  for (int h = 0; h < n_; ++h) cls.insert(conjugate(m, h));
  return {cls.begin(), cls.end()};
}

std::vector<int> FiniteGroup::centralizer(int m) const {
  std::vector<int> result;
  for (int a = 0; a < n_; ++a)
    if (mul(a, m) == mul(m, a)) result.push_back(a);
  return result;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= G.order()) throw MalformedInput("generator out of range");
  std::set<int> closure{G.identity()};
  std::vector<int> stack{G.identity()};
  for (int g : gens)
    if (closure.insert(g).second) stack.push_back(g);
  // products with generators suffice: words in the generators are reached,
  // and inverses come for free in a finite group
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int g : gens) {
      int y = G.mul(x, g);
      if (closure.insert(y).second) stack.push_back(y);
    }
  }
  return Subgroup{&G, {closure.begin(), closure.end()}};
}

Subgroup center_of_subgroup(const FiniteGroup& G, const Subgroup& P) {
  std::vector<int> center;
  for (int a : P.elements) {
    bool central = true;
    for (int p : P.elements)
      if (G.mul(a, p) != G.mul(p, a)) { central = false; break; }
    if (central) center.push_back(a);
  }
  return Subgroup{&G, center};
}

CosetDecomposition right_cosets(const FiniteGroup& G, const Subgroup& P) {
  int n = G.order();
  CosetDecomposition dec;
  dec.coset_of.assign(n, -1);

  // Pg keyed by its smallest element for deterministic ordering.
  std::map<int, std::vector<int>> cosets;
  for (int g = 0; g < n; ++g) {
    std::vector<int> coset;
    for (int p : P.elements) coset.push_back(G.mul(p, g));
    std::sort(coset.begin(), coset.end());
    cosets.emplace(coset[0], coset);
  }

  int identity_key = -1;
  for (const auto& [key, coset] : cosets)
    if (std::binary_search(coset.begin(), coset.end(), G.identity()))
      identity_key = key;

  dec.representatives.push_back(G.identity());
  for (int g : cosets.at(identity_key)) dec.coset_of[g] = 0;
  for (const auto& [key, coset] : cosets) {
    if (key == identity_key) continue;
    int idx = static_cast<int>(dec.representatives.size());
    dec.representatives.push_back(key);
    for (int g : coset) dec.coset_of[g] = idx;
  }
  return dec;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::set<std::vector<int>> found;
  found.insert(subgroup_generated(G, {}).elements);
  std::vector<std::vector<int>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& H : frontier) {
      for (int g = 0; g < G.order(); ++g) {
        if (std::binary_search(H.begin(), H.end(), g)) continue;
        std::vector<int> gens = H;
        gens.push_back(g);
        auto K = subgroup_generated(G, gens);
        if (found.insert(K.elements).second) next.push_back(K.elements);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> result;
  for (const auto& els : found) result.push_back(Subgroup{&G, els});
  std::sort(result.begin(), result.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return result;
}

}  // namespace qf
