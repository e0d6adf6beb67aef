#include "qf/quandle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "qf/errors.hpp"

namespace qf {

namespace {

void check_square(const std::vector<std::vector<int>>& t) {
  int n = static_cast<int>(t.size());
  if (n == 0) throw MalformedTable("empty quandle table");
  for (const auto& row : t) {
    if (static_cast<int>(row.size()) != n)
      throw MalformedTable("quandle table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw MalformedTable("table entry out of range");
  }
}

}  // namespace

Perm FiniteQuandle::column(int b) const {
  Perm p(order);
  for (int a = 0; a < order; ++a) p[a] = table[a][b];
  return p;
}

Perm FiniteQuandle::column_inv(int b) const { return inverse_perm(column(b)); }

ValidationReport validate_quandle(const std::vector<std::vector<int>>& table) {
  check_square(table);
  int n = static_cast<int>(table.size());
  ValidationReport report;

  for (int a = 0; a < n; ++a)
    if (table[a][a] != a) {
      report.violations.push_back({"idempotence", {a}});
      break;
    }

  for (int b = 0; b < n; ++b) {
    std::vector<char> seen(n, 0);
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (seen[table[a][b]]) { ok = false; break; }
      seen[table[a][b]] = 1;
    }
    if (!ok) {
      report.violations.push_back({"left_invertibility", {b}});
      break;
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) {
          report.violations.push_back({"self_distributivity", {a, b, c}});
          return report;
        }
  return report;
}

FiniteQuandle make_trivial(int n) {
  if (n < 1) throw MalformedInput("quandle order must be positive");
  FiniteQuandle Q;
  Q.order = n;
  Q.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) Q.table[a][b] = a;
  return Q;
}

FiniteQuandle make_dihedral(int n) {
  if (n < 1) throw MalformedInput("quandle order must be positive");
  FiniteQuandle Q;
  Q.order = n;
  Q.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) Q.table[a][b] = ((2 * b - a) % n + n) % n;
  return Q;
}

FiniteQuandle make_conjugation(const FiniteGroup& G, int class_rep) {
  if (class_rep < 0 || class_rep >= G.order())
    throw MalformedInput("class representative out of range");
  std::vector<int> cls = G.conjugacy_class(class_rep);
  std::map<int, int> index;
  for (std::size_t i = 0; i < cls.size(); ++i) index[cls[i]] = static_cast<int>(i);

  FiniteQuandle Q;
  Q.order = static_cast<int>(cls.size());
  Q.table.assign(Q.order, std::vector<int>(Q.order));
  Q.labels.reserve(cls.size());
  for (int g : cls) Q.labels.push_back("g" + std::to_string(g));
  for (int x = 0; x < Q.order; ++x)
    for (int y = 0; y < Q.order; ++y)
      Q.table[x][y] = index.at(G.conjugate(cls[x], cls[y]));
  return Q;
}

PermutationGroup inner_group(const FiniteQuandle& Q) {
  std::vector<Perm> gens;
  gens.reserve(Q.order);
  for (int b = 0; b < Q.order; ++b) gens.push_back(Q.column(b));
  return PermutationGroup(Q.order, std::move(gens));
}

std::vector<std::vector<int>> orbits(const FiniteQuandle& Q) {
  // direct breadth-first walk on the table, independent of inner_group
  std::vector<std::vector<int>> result;
  std::vector<char> done(Q.order, 0);
  for (int start = 0; start < Q.order; ++start) {
    if (done[start]) continue;
    std::vector<int> orbit{start};
    done[start] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int b = 0; b < Q.order; ++b) {
        for (int y : {Q.table[x][b], Q.column_inv(b)[x]}) {
          if (!done[y]) {
            done[y] = 1;
            orbit.push_back(y);
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

namespace {

struct HomSearch {
  const FiniteQuandle& src;
  const FiniteQuandle& tgt;
  std::size_t budget;
  std::size_t nodes = 0;
  std::vector<int> image;
  std::vector<std::vector<int>>* out = nullptr;  // collect all when set
  bool require_bijection = false;
  std::vector<char> used;
  bool found_one = false;

  bool consistent(int k) const {
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b) {
        int c = src.table[a][b];
        if (c > k) continue;
        if (a != k && b != k && c != k) continue;
        if (image[c] != tgt.table[image[a]][image[b]]) return false;
      }
    return true;
  }

  bool dfs(int k) {
    if (k == src.order) {
      if (out) out->push_back(image);
      found_one = true;
      return !out;  // stop at first hit when only existence is wanted
    }
    for (int v = 0; v < tgt.order; ++v) {
      if (require_bijection && used[v]) continue;
      if (++nodes > budget) throw SearchBudgetExceeded("hom search budget exhausted");
      image[k] = v;
      if (require_bijection) used[v] = 1;
      if (consistent(k) && dfs(k + 1)) return true;
      if (require_bijection) used[v] = 0;
    }
    image[k] = -1;
    return false;
  }
};

// per-element signature, preserved by any isomorphism
std::vector<std::pair<std::vector<int>, int>> iso_signature(const FiniteQuandle& Q) {
  auto orbs = orbits(Q);
  std::vector<int> orbit_size(Q.order);
  for (const auto& o : orbs)
    for (int x : o) orbit_size[x] = static_cast<int>(o.size());

  std::vector<std::pair<std::vector<int>, int>> sig(Q.order);
  for (int b = 0; b < Q.order; ++b) {
    Perm col = Q.column(b);
    std::vector<char> seen(Q.order, 0);
    std::vector<int> cycles;
    for (int a = 0; a < Q.order; ++a) {
      if (seen[a]) continue;
      int len = 0, x = a;
      while (!seen[x]) { seen[x] = 1; x = col[x]; ++len; }
      cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end());
    sig[b] = {cycles, orbit_size[b]};
  }
  return sig;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homs(const FiniteQuandle& source,
                                             const FiniteQuandle& target,
                                             std::size_t node_budget) {
  std::vector<std::vector<int>> result;
  HomSearch search{source, target, node_budget};
  search.image.assign(source.order, -1);
  search.out = &result;
  search.dfs(0);
  return result;
}

std::optional<std::vector<int>> find_isomorphism(const FiniteQuandle& Q1,
                                                 const FiniteQuandle& Q2) {
  if (Q1.order != Q2.order) return std::nullopt;
  auto sig1 = iso_signature(Q1);
  auto sig2 = iso_signature(Q2);
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  struct IsoSearch : HomSearch {
    const std::vector<std::pair<std::vector<int>, int>>* s1;
    const std::vector<std::pair<std::vector<int>, int>>* s2;
    IsoSearch(const FiniteQuandle& a, const FiniteQuandle& b, std::size_t budget)
        : HomSearch{a, b, budget} {}
    bool dfs2(int k) {
      if (k == src.order) return true;
      for (int v = 0; v < tgt.order; ++v) {
        if (used[v] || (*s1)[k] != (*s2)[v]) continue;
        image[k] = v;
        used[v] = 1;
        if (consistent(k) && dfs2(k + 1)) return true;
        used[v] = 0;
      }
      image[k] = -1;
      return false;
    }
  };

  IsoSearch search(Q1, Q2, kDefaultSearchBudget);
  search.image.assign(Q1.order, -1);
  search.used.assign(Q2.order, 0);
  search.s1 = &sig1;
  search.s2 = &sig2;
  if (search.dfs2(0)) return search.image;
  return std::nullopt;
}

bool are_isomorphic(const FiniteQuandle& Q1, const FiniteQuandle& Q2) {
  return find_isomorphism(Q1, Q2).has_value();
}

namespace {

// all permutations of {0..n-1} fixing point b, in lexicographic order
std::vector<Perm> perms_fixing(int n, int b) {
  std::vector<Perm> result;
  Perm p = identity_perm(n);
  do {
    if (p[b] == b) result.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(result.begin(), result.end());
  return result;
}

struct QuandleEnum {
  int n;
  std::vector<std::vector<Perm>> column_choices;  // per column index
  std::vector<std::vector<int>> table;            // filled column by column
  std::vector<FiniteQuandle> found;

  // distributivity triples whose needed columns are all <= k
  bool check_up_to(int k) const {
    for (int b = 0; b <= k; ++b)
      for (int c = 0; c <= k; ++c) {
        int d = table[b][c];
        if (d > k) continue;
        if (b != k && c != k && d != k) continue;
        for (int a = 0; a < n; ++a)
          if (table[table[a][b]][c] != table[table[a][c]][d]) return false;
      }
    return true;
  }

  void fill_column(int c, const Perm& p) {
    for (int a = 0; a < n; ++a) table[a][c] = p[a];
  }

  void dfs(int c) {
    if (c == n) {
      FiniteQuandle Q;
      Q.order = n;
      Q.table = table;
      for (const auto& prev : found)
        if (are_isomorphic(prev, Q)) return;
      found.push_back(std::move(Q));
      return;
    }
    for (const Perm& p : column_choices[c]) {
      fill_column(c, p);
      if (check_up_to(c)) dfs(c + 1);
    }
  }
};

}  // namespace

std::vector<FiniteQuandle> enumerate_quandles(int n, int order_cap) {
  if (n < 1) throw MalformedInput("quandle order must be positive");
  if (n > order_cap) throw OrderCapExceeded("enumeration order exceeds cap");
  QuandleEnum search;
  search.n = n;
  search.table.assign(n, std::vector<int>(n, 0));
  for (int b = 0; b < n; ++b) search.column_choices.push_back(perms_fixing(n, b));
  search.dfs(0);
  return std::move(search.found);
}

}  // namespace qf
