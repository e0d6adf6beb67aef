#include "qf/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "qf/errors.hpp"

namespace qf {

namespace {

struct ColoringSearch {
  const QuandlePresentation& pres;
  const FiniteQuandle& target;
  std::vector<Perm> inv_columns;
  // relations checkable once generators up to k are assigned
  std::vector<std::vector<QuandleRelation>> ready_at;

  explicit ColoringSearch(const QuandlePresentation& p, const FiniteQuandle& t)
      : pres(p), target(t) {
    inv_columns.reserve(t.order);
    for (int b = 0; b < t.order; ++b) inv_columns.push_back(t.column_inv(b));
    ready_at.assign(pres.generator_count, {});
    for (const QuandleRelation& rel : pres.relations) {
      int k = std::max({rel.out, rel.in, rel.over});
      ready_at[k].push_back(rel);
    }
  }

  bool holds(const QuandleRelation& rel, const std::vector<int>& image) const {
    int in = image[rel.in], over = image[rel.over], out = image[rel.out];
    int expected = rel.eps > 0 ? target.table[in][over] : inv_columns[over][in];
    return out == expected;
  }

  // counts colorings extending image[0..k-1]; nodes incremented per assignment
  std::uint64_t count_from(int k, std::vector<int>& image, std::uint64_t& nodes,
                           std::uint64_t budget) const {
    if (k == pres.generator_count) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < target.order; ++v) {
      if (++nodes > budget)
        throw SearchBudgetExceeded("coloring search budget exhausted");
      image[k] = v;
      bool ok = true;
      for (const QuandleRelation& rel : ready_at[k])
        if (!holds(rel, image)) { ok = false; break; }
      if (ok) total += count_from(k + 1, image, nodes, budget);
    }
    return total;
  }
};

// splits on the first generator; totals and the budget decision do not
// depend on the thread count
template <typename Subtree>
std::uint64_t split_count(int branches, int threads, std::uint64_t budget,
                          Subtree subtree) {
  std::vector<std::uint64_t> counts(branches, 0);
  std::vector<std::uint64_t> nodes(branches, 0);
  std::vector<std::exception_ptr> errors(branches);

  auto run_branch = [&](int v) {
    try {
      counts[v] = subtree(v, nodes[v]);
    } catch (...) {
      errors[v] = std::current_exception();
    }
  };

  if (threads <= 1) {
    for (int v = 0; v < branches; ++v) run_branch(v);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(threads, branches);
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (int v = next.fetch_add(1); v < branches; v = next.fetch_add(1))
          run_branch(v);
      });
    for (auto& th : pool) th.join();
  }

  for (int v = 0; v < branches; ++v)
    if (errors[v]) std::rethrow_exception(errors[v]);
  std::uint64_t total_nodes = 0, total = 0;
  for (int v = 0; v < branches; ++v) {
    total_nodes += nodes[v];
    total += counts[v];
  }
  if (total_nodes > budget)
    throw SearchBudgetExceeded("search budget exhausted");
  return total;
}

}  // namespace

std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& target,
                              std::size_t node_budget, int threads) {
  ColoringSearch search(p, target);
  if (p.generator_count == 0) return 1;
  return split_count(target.order, threads, node_budget,
                     [&](int v, std::uint64_t& nodes) -> std::uint64_t {
                       std::vector<int> image(p.generator_count, -1);
                       image[0] = v;
                       ++nodes;
                       for (const QuandleRelation& rel : search.ready_at[0])
                         if (!search.holds(rel, image)) return 0;
                       return search.count_from(1, image, nodes, node_budget);
                     });
}

namespace {

struct RepSearch {
  const GroupPresentation& pres;
  const FiniteGroup& target;
  int meridian;
  std::vector<char> in_class;
  std::vector<std::vector<const Word*>> ready_at;

  RepSearch(const GroupPresentation& p, const FiniteGroup& t, int m,
            const std::vector<int>& cls)
      : pres(p), target(t), meridian(m) {
    in_class.assign(t.order(), 0);
    for (int c : cls) in_class[c] = 1;
    ready_at.assign(std::max(pres.generator_count(), 1), {});
    for (const Word& r : pres.relators) {
      int k = 0;
      for (int letter : r) k = std::max(k, std::abs(letter) - 1);
      if (!r.empty()) ready_at[k].push_back(&r);
    }
  }

  bool holds(const Word& r, const std::vector<int>& image) const {
    int acc = target.identity();
    for (int letter : r) {
      int g = image[std::abs(letter) - 1];
      acc = target.mul(acc, letter > 0 ? g : target.inv(g));
    }
    return acc == target.identity();
  }

  std::uint64_t count_from(int k, std::vector<int>& image, std::uint64_t& nodes,
                           std::uint64_t budget) const {
    if (k == pres.generator_count()) return 1;
    std::uint64_t total = 0;
    for (int v = 0; v < target.order(); ++v) {
      if (k == meridian && !in_class[v]) continue;
      if (++nodes > budget)
        throw SearchBudgetExceeded("representation search budget exhausted");
      image[k] = v;
      bool ok = true;
      for (const Word* r : ready_at[k])
        if (!holds(*r, image)) { ok = false; break; }
      if (ok) total += count_from(k + 1, image, nodes, budget);
    }
    return total;
  }
};

}  // namespace

std::uint64_t count_group_reps(const GroupPresentation& p, const FiniteGroup& target,
                               int meridian, const std::vector<int>& cls,
                               std::size_t node_budget, int threads) {
  if (meridian < 0 || meridian >= p.generator_count())
    throw MalformedInput("meridian generator out of range");
  RepSearch search(p, target, meridian, cls);
  return split_count(target.order(), threads, node_budget,
                     [&](int v, std::uint64_t& nodes) -> std::uint64_t {
                       if (meridian == 0 && !search.in_class[v]) return 0;
                       std::vector<int> image(p.generator_count(), -1);
                       image[0] = v;
                       ++nodes;
                       for (const Word* r : search.ready_at[0])
                         if (!search.holds(*r, image)) return 0;
                       return search.count_from(1, image, nodes, node_budget);
                     });
}

CrosscheckReport crosscheck_conjugation(const QuandlePresentation& p_q,
                                        const GroupPresentation& p_g,
                                        int meridian, const FiniteGroup& G, int m,
                                        std::size_t node_budget, int threads) {
  CrosscheckReport report;
  FiniteQuandle conj = make_conjugation(G, m);
  report.colorings = count_colorings(p_q, conj, node_budget, threads);
  report.reps =
      count_group_reps(p_g, G, meridian, G.conjugacy_class(m), node_budget, threads);
  return report;
}

EquivalenceProbeResult welded_equivalence_probe(const Diagram& d1, const Diagram& d2,
                                                const std::vector<FiniteQuandle>& targets,
                                                std::size_t node_budget) {
  QuandlePresentation p1 = wirtinger_quandle(d1);
  QuandlePresentation p2 = wirtinger_quandle(d2);
  EquivalenceProbeResult result;
  for (const FiniteQuandle& t : targets) {
    result.counts1.push_back(count_colorings(p1, t, node_budget));
    result.counts2.push_back(count_colorings(p2, t, node_budget));
  }
  return result;
}

}  // namespace qf
