#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qf/diagram.hpp"
#include "qf/fp_group.hpp"
#include "qf/group.hpp"
#include "qf/quandle.hpp"

namespace qf {

/// Number of quandle homomorphisms from the presented quandle to the
/// target: assignments of target elements to generators satisfying every
/// crossing relation. Exact count; splits on the first generator across
/// threads when threads > 1, with a thread-count-independent total.
std::uint64_t count_colorings(const QuandlePresentation& p, const FiniteQuandle& target,
                              std::size_t node_budget = kDefaultSearchBudget,
                              int threads = 1);

/// Number of homomorphisms of the presented group into target whose
/// meridian generator lands in the given conjugacy class.
std::uint64_t count_group_reps(const GroupPresentation& p, const FiniteGroup& target,
                               int meridian, const std::vector<int>& cls,
                               std::size_t node_budget = kDefaultSearchBudget,
                               int threads = 1);

struct CrosscheckReport {
  std::uint64_t colorings = 0;
  std::uint64_t reps = 0;

  bool match() const { return colorings == reps; }
};

/// Structural cross-check for P = centralizer of m: colorings into the
/// conjugation quandle of m against meridian-constrained representations
/// into G. Both sides are counted independently.
CrosscheckReport crosscheck_conjugation(const QuandlePresentation& p_q,
                                        const GroupPresentation& p_g,
                                        int meridian, const FiniteGroup& G, int m,
                                        std::size_t node_budget = kDefaultSearchBudget,
                                        int threads = 1);

struct EquivalenceProbeResult {
  std::vector<std::uint64_t> counts1;
  std::vector<std::uint64_t> counts2;

  /// Unequal counts on any target certify the diagrams are inequivalent.
  bool all_equal() const { return counts1 == counts2; }
};

EquivalenceProbeResult welded_equivalence_probe(const Diagram& d1, const Diagram& d2,
                                                const std::vector<FiniteQuandle>& targets,
                                                std::size_t node_budget = kDefaultSearchBudget);

}  // namespace qf
