#pragma once

#include <string>
#include <vector>

#include "qf/coset_quandle.hpp"
#include "qf/fp_group.hpp"
#include "qf/quandle.hpp"

namespace qf {

/// Group read off a quandle by treating the operation as conjugation:
/// one generator per element, relators g_b^-1 g_a g_b = g_{a^b}.
struct AdconjPresentation {
  GroupPresentation presentation;
  const FiniteQuandle* quandle = nullptr;
};

/// Relators ordered by (a, b); freely trivial ones (a = b) are dropped,
/// fixed-column cases a^b = a are kept as commutators.
AdconjPresentation adconj_presentation(const FiniteQuandle& Q);

/// Action of a word on a quandle element: each positive letter g_b applies
/// the column map of b, each inverse letter its inverse.
int adconj_act(const FiniteQuandle& Q, int q, const Word& w);

/// Permutation image of the action; generator g_b maps to the column of b.
PermutationGroup adconj_inn_image(const FiniteQuandle& Q);

AbelianInvariants adconj_abelianization(const FiniteQuandle& Q);

struct StabilizerProbeReport {
  std::vector<int> base_stabilizer_in_image;  // indices into image elements
  std::size_t image_order = 0;
  std::size_t stabilizer_order = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Checks, on the finite permutation image of the action, that the base
/// element's stabilizer is exactly the image of P. The statement about the
/// full (generally infinite) group is not decided here.
StabilizerProbeReport stabilizer_probe(const CosetQuandle& CQ);

}  // namespace qf
