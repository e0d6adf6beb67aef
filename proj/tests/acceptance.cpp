// Acceptance suite: one pass/fail line per criterion. Exits nonzero when
// any criterion fails. argv[1] (optional) is the path to the qf CLI binary,
// needed for the determinism criterion.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qf/adconj.hpp"
#include "qf/coset_quandle.hpp"
#include "qf/errors.hpp"
#include "qf/invariants.hpp"
#include "qf/io.hpp"

using namespace qf;
using namespace qf::testing;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool ok,
               const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::vector<FiniteGroup> group_corpus() {
  std::vector<FiniteGroup> groups;
  for (int n = 1; n <= 6; ++n) groups.push_back(make_cyclic(n));
  groups.push_back(make_s3());
  groups.push_back(make_d4());
  groups.push_back(make_q8());
  groups.push_back(make_a4());
  groups.push_back(make_s4());
  return groups;
}

std::vector<FiniteQuandle> quandle_corpus() {
  std::vector<FiniteQuandle> quandles;
  for (int n = 1; n <= 4; ++n) quandles.push_back(make_trivial(n));
  for (int n = 1; n <= 6; ++n) quandles.push_back(make_dihedral(n));
  FiniteGroup S3 = make_s3();
  quandles.push_back(make_conjugation(S3, element_of_order(S3, 2)));
  quandles.push_back(make_conjugation(S3, element_of_order(S3, 3)));
  for (int n = 3; n <= 4; ++n)
    for (auto& Q : enumerate_quandles(n)) quandles.push_back(std::move(Q));
  int t = element_of_order(S3, 2);
  quandles.push_back(
      build_coset_quandle(S3, subgroup_generated(S3, {t}), t).quandle);
  return quandles;
}

// every (P, m) with m in Z(P), over every group in the corpus
template <typename Visit>
void sweep_coset_quandles(Visit visit) {
  for (const FiniteGroup& G : group_corpus()) {
    for (const Subgroup& P : all_subgroups(G)) {
      Subgroup Z = center_of_subgroup(G, P);
      for (int m : Z.elements) visit(G, P, m);
    }
  }
}

void run_criterion_1() {
  bool ok = true;
  std::string detail;
  auto check = [&](const FiniteQuandle& Q, const std::string& where) {
    if (!validate_quandle(Q.table).valid()) {
      ok = false;
      detail = where;
    }
  };
  for (int n = 1; n <= 6; ++n) check(make_trivial(n), "trivial");
  for (int n = 1; n <= 8; ++n) check(make_dihedral(n), "dihedral");
  for (const FiniteGroup& G : {make_s3(), make_d4(), make_q8(), make_a4()})
    for (int g = 0; g < G.order(); ++g)
      check(make_conjugation(G, g), "conjugation");
  sweep_coset_quandles([&](const FiniteGroup& G, const Subgroup& P, int m) {
    check(build_coset_quandle(G, P, m).quandle, "coset");
  });
  for (int n = 1; n <= 4; ++n)
    for (const FiniteQuandle& Q : enumerate_quandles(n)) check(Q, "enumerated");
  criterion(1, "axiom suite over all constructions", ok, detail);
}

void run_criterion_2() {
  bool ok = true;
  std::string detail;

  FiniteGroup S3 = make_s3();
  int t = element_of_order(S3, 2);
  CosetQuandle CQ = build_coset_quandle(S3, subgroup_generated(S3, {t}), t);
  auto witness = find_isomorphism(CQ.quandle, make_dihedral(3));
  if (!witness) {
    ok = false;
    detail = "S3 example not isomorphic to dihedral 3";
  } else {
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3; ++b)
        if ((*witness)[CQ.quandle.table[a][b]] !=
            make_dihedral(3).table[(*witness)[a]][(*witness)[b]]) {
          ok = false;
          detail = "witness does not verify";
        }
  }

  bool threw = false;
  try {
    build_coset_quandle(S3, subgroup_generated(S3, {1, 2, 3, 4, 5}), t);
  } catch (const CentralityViolation&) {
    threw = true;
  }
  if (!threw) {
    ok = false;
    detail = "non-central meridian accepted";
  }

  // representative independence over the whole corpus sweep
  sweep_coset_quandles([&](const FiniteGroup& G, const Subgroup& P, int m) {
    if (!ok) return;
    CosetQuandle C = build_coset_quandle(G, P, m);
    for (int a : P.elements)
      for (int h = 0; h < G.order() && ok; ++h) {
        if (G.conjugate(m, h) != G.conjugate(m, G.mul(a, h))) {
          ok = false;
          detail = "representative dependence at |G|=" + std::to_string(G.order());
        }
      }
    (void)C;
  });
  criterion(2, "coset construction (isomorphism, centrality, representatives)", ok,
            detail);
}

void run_criterion_3() {
  bool ok = true;
  std::string detail;
  sweep_coset_quandles([&](const FiniteGroup& G, const Subgroup& P, int m) {
    if (!ok) return;
    CosetQuandle CQ = build_coset_quandle(G, P, m);
    SelfCheckReport report = structure_selfcheck(CQ);
    if (!report.passed()) {
      ok = false;
      detail = "|G|=" + std::to_string(G.order()) + " |P|=" +
               std::to_string(P.order()) + ": " + report.failures[0];
    }
  });
  criterion(3, "action/stabilizer/transitivity suite on the sweep", ok, detail);
}

void run_criterion_4() {
  bool ok = true;
  std::string detail;
  for (const FiniteQuandle& Q : quandle_corpus()) {
    if (adconj_inn_image(Q).generators() != inner_group(Q).generators()) {
      ok = false;
      detail = "inn image generators differ";
      break;
    }
    AbelianInvariants inv = adconj_abelianization(Q);
    if (inv.free_rank != static_cast<int>(orbits(Q).size()) ||
        !inv.torsion.empty()) {
      ok = false;
      detail = "abelianization rank/torsion off at order " + std::to_string(Q.order);
      break;
    }
  }
  criterion(4, "adconj image and abelianization over the quandle corpus", ok, detail);
}

void run_criterion_5() {
  bool ok = true;
  std::string detail;
  FiniteGroup S3 = make_s3();
  FiniteGroup Z3 = make_cyclic(3);
  struct Target {
    const FiniteGroup* G;
    int m;
    std::string name;
  };
  std::vector<Target> targets{{&S3, element_of_order(S3, 2), "S3 transposition"},
                              {&S3, element_of_order(S3, 3), "S3 3-cycle"},
                              {&Z3, 1, "Z3 generator"}};
  std::vector<std::pair<std::string, std::string>> diagrams{
      {"trefoil", kTrefoil},
      {"figure-eight", kFigureEight},
      {"virtual trefoil", kVirtualTrefoil},
      {"unknot", kUnknot},
      {"trefoil arc", kTrefoilArc}};
  for (const auto& [name, code] : diagrams) {
    Diagram d = parse_gauss(code);
    auto wq = wirtinger_quandle(d);
    auto wg = wirtinger_group(d);
    for (const Target& target : targets) {
      CrosscheckReport report = crosscheck_conjugation(
          wq, wg.presentation, wg.peripheral.meridian, *target.G, target.m);
      if (!report.match()) {
        ok = false;
        detail = name + " / " + target.name + ": " +
                 std::to_string(report.colorings) + " vs " +
                 std::to_string(report.reps);
      }
      if (name == "trefoil" && target.name == "S3 transposition" &&
          (report.colorings != 9 || report.reps != 9)) {
        ok = false;
        detail = "trefoil/S3 expected 9 = 9";
      }
    }
  }
  criterion(5, "coloring vs representation cross-check grid", ok, detail);
}

void run_criterion_6() {
  bool ok = true;
  std::string detail;
  Diagram trefoil = parse_gauss(kTrefoil);
  Diagram kinked = parse_gauss(kTrefoilKink);
  Diagram r2 = parse_gauss(kTrefoilR2);
  Diagram unknot = parse_gauss(kUnknot);

  std::vector<FiniteQuandle> targets = quandle_corpus();
  if (!welded_equivalence_probe(trefoil, kinked, targets).all_equal()) {
    ok = false;
    detail = "kinked trefoil differs";
  }
  if (!welded_equivalence_probe(trefoil, r2, targets).all_equal()) {
    ok = false;
    detail = "R2 trefoil differs";
  }
  auto vs_unknot =
      welded_equivalence_probe(trefoil, unknot, {make_dihedral(3)});
  if (vs_unknot.counts1 != std::vector<std::uint64_t>{9} ||
      vs_unknot.counts2 != std::vector<std::uint64_t>{3}) {
    ok = false;
    detail = "trefoil vs unknot should be 9 vs 3 on dihedral 3";
  }
  criterion(6, "move-equivalent pairs agree, trefoil vs unknot differs", ok, detail);
}

void run_criterion_7() {
  bool ok = true;
  std::string detail;
  GroupPresentation P =
      make_presentation({"a", "b"}, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2}});
  if (todd_coxeter(P, {}).cosets != 6) {
    ok = false;
    detail = "trivial subgroup index";
  }
  if (todd_coxeter(P, {{2}}).cosets != 2) {
    ok = false;
    detail = "subgroup <b> index";
  }
  AbelianInvariants inv =
      abelianization(wirtinger_group(parse_gauss(kTrefoil)).presentation);
  if (inv.free_rank != 1 || !inv.torsion.empty()) {
    ok = false;
    detail = "trefoil abelianization";
  }
  criterion(7, "coset enumeration and trefoil abelianization", ok, detail);
}

std::string run_cli(const std::string& binary, const std::string& args,
                    int threads, const std::string& tag) {
  std::string out = "acceptance_" + tag + ".out";
  std::string cmd = "QF_THREADS=" + std::to_string(threads) + " \"" + binary +
                    "\" " + args + " > " + out + " 2>&1";
  if (std::system(cmd.c_str()) != 0) return "<<exit failure>>";
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void run_criterion_8(const char* binary) {
  if (!binary) {
    criterion(8, "determinism across thread counts", false, "no CLI path given");
    return;
  }
  std::ofstream("acceptance_trefoil.gauss") << kTrefoil << "\n";
  std::ofstream("acceptance_d3.json") << quandle_to_json(make_dihedral(3)).dump()
                                      << "\n";
  std::ofstream("acceptance_s3.json") << group_to_json(make_s3()).dump() << "\n";

  bool ok = true;
  std::string detail;
  std::vector<std::string> commands{
      "--json color acceptance_trefoil.gauss acceptance_d3.json",
      "--json crosscheck acceptance_trefoil.gauss acceptance_s3.json --class-rep " +
          std::to_string(element_of_order(make_s3(), 2)),
      "--json adconj acceptance_d3.json --abelianization",
      "--json enumerate 3",
      "--json validate acceptance_d3.json",
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string one = run_cli(binary, commands[i], 1, "t1");
    std::string many = run_cli(binary, commands[i], 8, "t8");
    if (one.empty() || one == "<<exit failure>>" || one != many) {
      ok = false;
      detail = "command differs: " + commands[i];
      break;
    }
  }
  criterion(8, "determinism across thread counts", ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  run_criterion_1();
  run_criterion_2();
  run_criterion_3();
  run_criterion_4();
  run_criterion_5();
  run_criterion_6();
  run_criterion_7();
  run_criterion_8(argc > 1 ? argv[1] : nullptr);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
