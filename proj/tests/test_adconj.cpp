#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "qf/adconj.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

std::vector<FiniteQuandle> corpus() {
  std::vector<FiniteQuandle> quandles{make_trivial(1), make_trivial(3),
                                      make_dihedral(3), make_dihedral(4),
                                      make_dihedral(6)};
  FiniteGroup S3 = make_s3();
  quandles.push_back(make_conjugation(S3, element_of_order(S3, 2)));
  for (auto& Q : enumerate_quandles(4)) quandles.push_back(std::move(Q));
  return quandles;
}

}  // namespace

TEST_CASE("adconj_presentation shapes") {
  AdconjPresentation one = adconj_presentation(make_trivial(1));
  CHECK(one.presentation.generator_count() == 1);
  CHECK(one.presentation.relators.empty());

  // trivial quandle: every surviving relator is a commutator
  AdconjPresentation triv = adconj_presentation(make_trivial(3));
  CHECK(triv.presentation.relators.size() == 6);  // 9 candidates, 3 freely trivial
  for (const Word& r : triv.presentation.relators) {
    REQUIRE(r.size() == 4);
    CHECK(r[0] == -r[2]);
    CHECK(r[1] == -r[3]);
  }

  // dihedral 3: 9 candidates, the 3 diagonal ones reduce away
  AdconjPresentation d3 = adconj_presentation(make_dihedral(3));
  CHECK(d3.presentation.relators.size() == 6);
}

TEST_CASE("adconj_act basics") {
  FiniteQuandle D3 = make_dihedral(3);
  CHECK(adconj_act(D3, 0, {}) == 0);
  for (int q = 0; q < 3; ++q)
    for (int b = 1; b <= 3; ++b) CHECK(adconj_act(D3, q, {b, -b}) == q);

  // word action equals composing column permutations
  CHECK(adconj_act(D3, 0, {2, 3}) == D3.table[D3.table[0][1]][2]);
  Perm composed = compose(D3.column(1), D3.column(2));
  for (int q = 0; q < 3; ++q) CHECK(adconj_act(D3, q, {2, 3}) == composed[q]);
}

TEST_CASE("adconj relators act trivially on the quandle") {
  for (const FiniteQuandle& Q : corpus()) {
    AdconjPresentation pres = adconj_presentation(Q);
    for (const Word& r : pres.presentation.relators)
      for (int q = 0; q < Q.order; ++q) CHECK(adconj_act(Q, q, r) == q);
  }
}

TEST_CASE("words with equal permutation images act identically") {
  FiniteQuandle D3 = make_dihedral(3);
  // sigma_0 sigma_1 and sigma_2 sigma_0 both rotate; verify via images
  Word w1{1, 2}, w2{3, 1};
  Perm p1 = compose(D3.column(0), D3.column(1));
  Perm p2 = compose(D3.column(2), D3.column(0));
  REQUIRE(p1 == p2);
  for (int q = 0; q < 3; ++q) CHECK(adconj_act(D3, q, w1) == adconj_act(D3, q, w2));
}

TEST_CASE("adconj_inn_image equals inner_group generator by generator") {
  for (const FiniteQuandle& Q : corpus()) {
    PermutationGroup a = adconj_inn_image(Q);
    PermutationGroup b = inner_group(Q);
    CHECK(a.generators() == b.generators());
    CHECK(a.order() == b.order());
  }
}

TEST_CASE("inn image order on dihedral 4 matches the closure oracle") {
  FiniteQuandle D4 = make_dihedral(4);
  std::set<Perm> closure{identity_perm(4)};
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = closure;
    for (const Perm& p : snapshot)
      for (int b = 0; b < 4; ++b)
        if (closure.insert(compose(p, D4.column(b))).second) grew = true;
  }
  CHECK(adconj_inn_image(D4).order() == closure.size());
}

TEST_CASE("adconj_abelianization is free of rank = orbit count") {
  CHECK(adconj_abelianization(make_trivial(3)) == AbelianInvariants{3, {}});
  CHECK(adconj_abelianization(make_dihedral(3)) == AbelianInvariants{1, {}});
  CHECK(adconj_abelianization(make_dihedral(4)) == AbelianInvariants{2, {}});
  for (const FiniteQuandle& Q : corpus()) {
    AbelianInvariants inv = adconj_abelianization(Q);
    CHECK(inv.free_rank == static_cast<int>(orbits(Q).size()));
    CHECK(inv.torsion.empty());
  }
}

TEST_CASE("enumerating the full adconj quotient gives index 1") {
  FiniteQuandle D3 = make_dihedral(3);
  AdconjPresentation pres = adconj_presentation(D3);
  std::vector<Word> all_gens;
  for (int i = 1; i <= 3; ++i) all_gens.push_back({i});
  CHECK(todd_coxeter(pres.presentation, all_gens).cosets == 1);
}

TEST_CASE("stabilizer_probe on the coset quandle examples") {
  FiniteGroup S3 = make_s3();
  int t = element_of_order(S3, 2);
  CHECK(stabilizer_probe(build_coset_quandle(S3, subgroup_generated(S3, {t}), t))
            .passed());

  int c = element_of_order(S3, 3);
  StabilizerProbeReport over_a3 =
      stabilizer_probe(build_coset_quandle(S3, subgroup_generated(S3, {c}), c));
  CHECK(over_a3.passed());
  CHECK(over_a3.image_order == 1);
  CHECK(over_a3.stabilizer_order == 1);

  FiniteGroup Z4 = make_cyclic(4);
  StabilizerProbeReport whole =
      stabilizer_probe(build_coset_quandle(Z4, subgroup_generated(Z4, {1}), 2));
  CHECK(whole.passed());
  CHECK(whole.stabilizer_order == whole.image_order);
}
