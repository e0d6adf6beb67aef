#include "qf/adconj.hpp"

#include <algorithm>
#include <set>

#include "qf/errors.hpp"

namespace qf {

AdconjPresentation adconj_presentation(const FiniteQuandle& Q) {
  int n = Q.order;
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));

  std::vector<Word> relators;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = Q.table[a][b];
      // g_b^-1 g_a g_b g_c^-1; freely trivial exactly when a = b (then c = a)
      Word r = free_reduce({-(b + 1), a + 1, b + 1, -(c + 1)});
      if (!r.empty()) relators.push_back(std::move(r));
    }
  AdconjPresentation result;
  result.presentation = make_presentation(std::move(names), std::move(relators));
  result.quandle = &Q;
  return result;
}

int adconj_act(const FiniteQuandle& Q, int q, const Word& w) {
  if (q < 0 || q >= Q.order) throw MalformedInput("quandle element out of range");
  for (int letter : w) {
    int b = letter > 0 ? letter - 1 : -letter - 1;
    if (b >= Q.order) throw MalformedInput("word letter out of range");
    q = letter > 0 ? Q.table[q][b] : Q.column_inv(b)[q];
  }
  return q;
}

PermutationGroup adconj_inn_image(const FiniteQuandle& Q) {
  // generator-by-generator the same group as inner_group
  std::vector<Perm> gens;
  gens.reserve(Q.order);
  for (int b = 0; b < Q.order; ++b) {
    Perm p(Q.order);
    for (int a = 0; a < Q.order; ++a) p[a] = adconj_act(Q, a, {b + 1});
    gens.push_back(std::move(p));
  }
  return PermutationGroup(Q.order, std::move(gens));
}

AbelianInvariants adconj_abelianization(const FiniteQuandle& Q) {
  return abelianization(adconj_presentation(Q).presentation);
}

StabilizerProbeReport stabilizer_probe(const CosetQuandle& CQ) {
  StabilizerProbeReport report;
  const FiniteGroup& G = *CQ.group;
  PermutationGroup image = adconj_inn_image(CQ.quandle);
  const auto& elements = image.elements();
  report.image_order = elements.size();

  std::set<Perm> stabilizer;
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i][CQ.base()] == CQ.base()) {
      stabilizer.insert(elements[i]);
      report.base_stabilizer_in_image.push_back(static_cast<int>(i));
    }
  report.stabilizer_order = stabilizer.size();

  // the action image of the normal closure of m is the inner image
  Subgroup closure = subgroup_generated(G, G.conjugacy_class(CQ.meridian));
  std::set<Perm> closure_image;
  for (int x : closure.elements) closure_image.insert(group_action(CQ, x));
  if (closure_image != std::set<Perm>(elements.begin(), elements.end()))
    report.failures.push_back(
        "normal-closure action image differs from the inner image");

  // base stabilizer in the inner image = (action image of P) restricted to
  // the inner image; only this finite shadow of the group-level statement
  // is decided here
  std::set<Perm> p_image;
  for (int x : CQ.subgroup.elements) p_image.insert(group_action(CQ, x));
  std::set<Perm> expected;
  for (const Perm& q : p_image)
    if (closure_image.count(q)) expected.insert(q);
  if (expected != stabilizer)
    report.failures.push_back(
        "base stabilizer in the image is not the image of P");
  return report;
}

}  // namespace qf
