#include "qf/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

int Diagram::writhe() const {
  int w = 0;
  for (const Pass& p : passes)
    if (p.over) w += p.sign;
  return w;
}

Diagram parse_gauss(const std::string& text) {
  Diagram d;
  std::istringstream in(text);
  std::string token;
  bool saw_pass = false;
  while (in >> token) {
    if (token == "arc;") {
      if (saw_pass) throw ParseError("header after pass tokens: " + token);
      d.kind = DiagramKind::Arc;
      continue;
    }
    if (token.rfind("flavor=", 0) == 0) {
      if (saw_pass) throw ParseError("header after pass tokens: " + token);
      if (token.back() != ';') throw ParseError("flavor header must end in ';'");
      std::string flavor = token.substr(7, token.size() - 8);
      if (flavor == "classical")
        d.flavor = DiagramFlavor::Classical;
      else if (flavor == "virtual")
        d.flavor = DiagramFlavor::Virtual;
      else if (flavor == "welded")
        d.flavor = DiagramFlavor::Welded;
      else
        throw ParseError("unknown flavor: " + flavor);
      continue;
    }

    Pass p;
    if (token.size() < 3) throw ParseError("bad token: " + token);
    if (token[0] == 'O')
      p.over = true;
    else if (token[0] == 'U')
      p.over = false;
    else
      throw ParseError("token must start with O or U: " + token);
    char sign = token.back();
    if (sign == '+')
      p.sign = +1;
    else if (sign == '-')
      p.sign = -1;
    else
      throw ParseError("token must end in + or -: " + token);
    std::string digits = token.substr(1, token.size() - 2);
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(),
                     [](unsigned char ch) { return std::isdigit(ch); }))
      throw ParseError("bad crossing id in token: " + token);
    p.crossing = std::stoi(digits);
    d.passes.push_back(p);
    saw_pass = true;
  }

  std::map<int, std::vector<const Pass*>> by_crossing;
  for (const Pass& p : d.passes) by_crossing[p.crossing].push_back(&p);
  for (const auto& [id, ps] : by_crossing) {
    if (ps.size() != 2)
      throw PairingError("crossing " + std::to_string(id) +
                         " appears " + std::to_string(ps.size()) + " times");
    if (ps[0]->over == ps[1]->over)
      throw PairingError("crossing " + std::to_string(id) +
                         " lacks an over/under pair");
    if (ps[0]->sign != ps[1]->sign)
      throw PairingError("crossing " + std::to_string(id) + " has mismatched signs");
  }
  return d;
}

namespace {

struct ArcWalk {
  int generators;
  std::vector<int> incoming;  // arc entering each position
  std::vector<int> outgoing;  // arc leaving each position (differs at under passes)
};

ArcWalk walk_arcs(const Diagram& d) {
  int len = static_cast<int>(d.passes.size());
  int c = d.crossing_count();
  bool closed = d.kind == DiagramKind::Closed;

  ArcWalk walk;
  walk.incoming.assign(len, 0);
  walk.outgoing.assign(len, 0);
  if (len == 0) {
    walk.generators = 1;  // unknot / bare arc
    return walk;
  }
  walk.generators = closed ? c : c + 1;

  int unders_before = 0;
  for (int p = 0; p < len; ++p) {
    int in_arc = closed ? unders_before % c : unders_before;
    if (!d.passes[p].over) ++unders_before;
    int out_arc = closed ? unders_before % c : unders_before;
    walk.incoming[p] = in_arc;
    walk.outgoing[p] = out_arc;
  }
  return walk;
}

}  // namespace

QuandlePresentation wirtinger_quandle(const Diagram& d) {
  ArcWalk walk = walk_arcs(d);
  QuandlePresentation pres;
  pres.generator_count = walk.generators;

  std::map<int, int> over_arc;  // crossing id -> arc of its over pass
  for (std::size_t p = 0; p < d.passes.size(); ++p)
    if (d.passes[p].over) over_arc[d.passes[p].crossing] = walk.incoming[p];

  for (std::size_t p = 0; p < d.passes.size(); ++p) {
    const Pass& pass = d.passes[p];
    if (pass.over) continue;
    QuandleRelation rel;
    rel.in = walk.incoming[p];
    rel.out = walk.outgoing[p];
    rel.over = over_arc.at(pass.crossing);
    rel.eps = pass.sign;
    pres.relations.push_back(rel);
  }
  return pres;
}

WirtingerGroup wirtinger_group(const Diagram& d) {
  QuandlePresentation q = wirtinger_quandle(d);

  std::vector<std::string> names;
  for (int i = 0; i < q.generator_count; ++i)
    names.push_back("x" + std::to_string(i));

  // x_k = x_i ^ {x_j, eps}  becomes  x_k^-1 x_j^-eps x_i x_j^eps
  std::vector<Word> relators;
  for (const QuandleRelation& rel : q.relations) {
    int j = rel.over + 1, i = rel.in + 1, k = rel.out + 1;
    relators.push_back({-k, -rel.eps * j, i, rel.eps * j});
  }

  WirtingerGroup result;
  result.presentation = make_presentation(std::move(names), std::move(relators));

  ArcWalk walk = walk_arcs(d);
  result.peripheral.meridian = d.passes.empty() ? 0 : walk.incoming[0];
  if (d.kind == DiagramKind::Closed) {
    result.peripheral.has_longitude = true;
    std::map<int, int> over_arc;
    for (std::size_t p = 0; p < d.passes.size(); ++p)
      if (d.passes[p].over) over_arc[d.passes[p].crossing] = walk.incoming[p];
    Word longitude;
    for (std::size_t p = 0; p < d.passes.size(); ++p) {
      const Pass& pass = d.passes[p];
      if (pass.over) continue;
      longitude.push_back(pass.sign * (over_arc.at(pass.crossing) + 1));
    }
    int m = result.peripheral.meridian + 1;
    int w = d.writhe();
    for (int i = 0; i < std::abs(w); ++i) longitude.push_back(w > 0 ? -m : m);
    result.peripheral.longitude = free_reduce(std::move(longitude));
  }
  return result;
}

}  // namespace qf
