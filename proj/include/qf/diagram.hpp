#pragma once

#include <string>
#include <vector>

#include "qf/fp_group.hpp"
#include "qf/quandle.hpp"

namespace qf {

enum class DiagramKind { Closed, Arc };
enum class DiagramFlavor { Classical, Virtual, Welded };

struct Pass {
  int crossing = 0;   // crossing id as written
  bool over = false;  // over- or under-pass
  int sign = +1;      // crossing sign, shared by both passes
};

/// Signed Gauss code of a classical/virtual/welded knot or arc. Closed
/// codes are read cyclically, arcs linearly with two free ends. The
/// classical flavor is a user assertion; planarity is not checked.
struct Diagram {
  DiagramKind kind = DiagramKind::Closed;
  DiagramFlavor flavor = DiagramFlavor::Classical;
  std::vector<Pass> passes;

  int crossing_count() const { return static_cast<int>(passes.size()) / 2; }
  int writhe() const;
};

/// Grammar: optional headers `arc;` and `flavor=classical|virtual|welded;`,
/// then whitespace-separated tokens `O<id><sign>` / `U<id><sign>`.
/// Throws ParseError on grammar violations, PairingError when a crossing id
/// does not appear exactly once over and once under with matching signs.
Diagram parse_gauss(const std::string& text);

/// Wirtinger-style quandle presentation: one generator per arc, one
/// relation per crossing. Relation (k, i, j, eps) reads x_k = x_i ^ x_j
/// when eps = +1 and x_k = x_i with the inverse operation by x_j when
/// eps = -1.
struct QuandleRelation {
  int out = 0;
  int in = 0;
  int over = 0;
  int eps = +1;
};

struct QuandlePresentation {
  int generator_count = 0;
  std::vector<QuandleRelation> relations;
};

QuandlePresentation wirtinger_quandle(const Diagram& d);

struct PeripheralData {
  int meridian = 0;      // generator index
  bool has_longitude = false;
  Word longitude;        // closed diagrams only
};

struct WirtingerGroup {
  GroupPresentation presentation;
  PeripheralData peripheral;
};

WirtingerGroup wirtinger_group(const Diagram& d);

}  // namespace qf
