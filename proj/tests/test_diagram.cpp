#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "qf/diagram.hpp"
#include "qf/errors.hpp"
#include "qf/invariants.hpp"

using namespace qf;
using namespace qf::testing;

TEST_CASE("parse_gauss on the virtual trefoil") {
  Diagram d = parse_gauss(kVirtualTrefoil);
  CHECK(d.kind == DiagramKind::Closed);
  CHECK(d.flavor == DiagramFlavor::Virtual);
  CHECK(d.crossing_count() == 2);
  CHECK(d.writhe() == 2);
}

TEST_CASE("parse_gauss on a kink and the trefoil") {
  Diagram kink = parse_gauss("O1- U1-");
  CHECK(kink.crossing_count() == 1);
  CHECK(kink.writhe() == -1);

  Diagram trefoil = parse_gauss(kTrefoil);
  CHECK(trefoil.crossing_count() == 3);
  CHECK(trefoil.kind == DiagramKind::Closed);
  CHECK(trefoil.flavor == DiagramFlavor::Classical);
  CHECK(trefoil.writhe() == 3);
}

TEST_CASE("parse_gauss arc header") {
  Diagram d = parse_gauss(kTrefoilArc);
  CHECK(d.kind == DiagramKind::Arc);
  CHECK(d.crossing_count() == 3);
}

TEST_CASE("parse_gauss grammar errors") {
  CHECK_THROWS_AS(parse_gauss("X1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1* U1*"), ParseError);
  CHECK_THROWS_AS(parse_gauss("flavor=smooth; O1+ U1+"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O1+ arc;"), ParseError);
}

TEST_CASE("parse_gauss pairing errors") {
  CHECK_THROWS_AS(parse_gauss("O1+ U2+"), PairingError);          // unpaired ids
  CHECK_THROWS_AS(parse_gauss("O1+ O1+"), PairingError);          // two overs
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), PairingError);          // sign mismatch
  CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+ U1+"), PairingError);  // id reused
}

TEST_CASE("wirtinger_quandle of the trefoil") {
  QuandlePresentation p = wirtinger_quandle(parse_gauss(kTrefoil));
  CHECK(p.generator_count == 3);
  REQUIRE(p.relations.size() == 3);
  // arc-walk oracle, worked by hand: x1 = x0^x2, x2 = x1^x0, x0 = x2^x1
  CHECK(p.relations[0].out == 1);
  CHECK(p.relations[0].in == 0);
  CHECK(p.relations[0].over == 2);
  CHECK(p.relations[0].eps == 1);
  CHECK(p.relations[1].out == 2);
  CHECK(p.relations[1].in == 1);
  CHECK(p.relations[1].over == 0);
  CHECK(p.relations[2].out == 0);
  CHECK(p.relations[2].in == 2);
  CHECK(p.relations[2].over == 1);
}

TEST_CASE("wirtinger_quandle of the unknot and the virtual trefoil") {
  QuandlePresentation unknot = wirtinger_quandle(parse_gauss(kUnknot));
  CHECK(unknot.generator_count == 1);
  CHECK(unknot.relations.empty());

  QuandlePresentation vt = wirtinger_quandle(parse_gauss(kVirtualTrefoil));
  CHECK(vt.generator_count == 2);
  REQUIRE(vt.relations.size() == 2);
  // arc-walk oracle: x1 = x0^x1 (crossing 2), x0 = x1^x0 (crossing 1)
  CHECK(vt.relations[0].out == 1);
  CHECK(vt.relations[0].in == 0);
  CHECK(vt.relations[0].over == 1);
  CHECK(vt.relations[1].out == 0);
  CHECK(vt.relations[1].in == 1);
  CHECK(vt.relations[1].over == 0);
}

TEST_CASE("arc diagrams get one extra generator") {
  for (const std::string& code : {kTrefoil, kFigureEight}) {
    Diagram closed = parse_gauss(code);
    Diagram arc = parse_gauss("arc; " + code);
    CHECK(wirtinger_quandle(closed).generator_count == closed.crossing_count());
    CHECK(wirtinger_quandle(arc).generator_count == arc.crossing_count() + 1);
  }
  // bare arc: one generator, no relations, no error
  QuandlePresentation bare = wirtinger_quandle(parse_gauss("arc;"));
  CHECK(bare.generator_count == 1);
  CHECK(bare.relations.empty());
}

TEST_CASE("wirtinger_group of the trefoil") {
  WirtingerGroup w = wirtinger_group(parse_gauss(kTrefoil));
  CHECK(w.presentation.generator_count() == 3);
  CHECK(w.presentation.relators.size() == 3);
  AbelianInvariants inv = abelianization(w.presentation);
  CHECK(inv.free_rank == 1);
  CHECK(inv.torsion.empty());

  CHECK(w.peripheral.meridian == 0);
  REQUIRE(w.peripheral.has_longitude);
  // writhe +3: three positive over-arc letters and three meridian inverses
  int exponent_sum = 0;
  for (int letter : w.peripheral.longitude) exponent_sum += letter > 0 ? 1 : -1;
  CHECK(exponent_sum == 0);
}

TEST_CASE("unknot group is free on one generator") {
  WirtingerGroup w = wirtinger_group(parse_gauss(kUnknot));
  CHECK(w.presentation.generator_count() == 1);
  CHECK(w.presentation.relators.empty());
  CHECK(abelianization(w.presentation).free_rank == 1);
}

TEST_CASE("arc diagrams carry meridian-only peripheral data") {
  WirtingerGroup w = wirtinger_group(parse_gauss(kTrefoilArc));
  CHECK_FALSE(w.peripheral.has_longitude);
  CHECK(w.peripheral.meridian == 0);
}

TEST_CASE("closed-knot group abelianizations are infinite cyclic") {
  for (const std::string& code :
       {kTrefoil, kFigureEight, kVirtualTrefoil, kTrefoilKink, kTrefoilR2}) {
    AbelianInvariants inv =
        abelianization(wirtinger_group(parse_gauss(code)).presentation);
    CHECK(inv.free_rank == 1);
    CHECK(inv.torsion.empty());
  }
}

TEST_CASE("coloring counts survive relabeling and rotation") {
  FiniteQuandle D3 = make_dihedral(3);
  std::uint64_t base = count_colorings(wirtinger_quandle(parse_gauss(kTrefoil)), D3);

  // crossing ids renamed
  std::uint64_t renamed = count_colorings(
      wirtinger_quandle(parse_gauss("U7+ O5+ U2+ O7+ U5+ O2+")), D3);
  CHECK(renamed == base);

  // every rotation of the closed code
  std::vector<std::string> tokens{"U1+", "O2+", "U3+", "O1+", "U2+", "O3+"};
  for (std::size_t shift = 0; shift < tokens.size(); ++shift) {
    std::string code;
    for (std::size_t i = 0; i < tokens.size(); ++i)
      code += tokens[(i + shift) % tokens.size()] + " ";
    CHECK(count_colorings(wirtinger_quandle(parse_gauss(code)), D3) == base);
  }
}
