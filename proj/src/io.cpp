#include "qf/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

json quandle_to_json(const FiniteQuandle& Q) {
  json j;
  j["order"] = Q.order;
  j["table"] = Q.table;
  if (!Q.labels.empty()) j["labels"] = Q.labels;
  return j;
}

FiniteQuandle quandle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("table"))
    throw ParseError("quandle JSON needs \"order\" and \"table\"");
  FiniteQuandle Q;
  try {
    Q.order = j.at("order").get<int>();
    Q.table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("labels")) Q.labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad quandle JSON: ") + e.what());
  }
  if (static_cast<int>(Q.table.size()) != Q.order)
    throw MalformedTable("stated order disagrees with the table size");
  return Q;
}

json group_to_json(const FiniteGroup& G) {
  json j;
  j["order"] = G.order();
  j["mult"] = G.table();
  return j;
}

FiniteGroup group_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("group JSON must be an object");
  try {
    if (j.contains("mult")) {
      auto mult = j.at("mult").get<std::vector<std::vector<int>>>();
      if (j.contains("order") &&
          j.at("order").get<int>() != static_cast<int>(mult.size()))
        throw MalformedTable("stated order disagrees with the table size");
      return FiniteGroup::from_table(std::move(mult));
    }
    if (j.contains("perm_gens")) {
      int degree = j.at("degree").get<int>();
      auto gens = j.at("perm_gens").get<std::vector<Perm>>();
      return FiniteGroup::from_permutation_generators(degree, gens);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad group JSON: ") + e.what());
  }
  throw ParseError("group JSON needs \"mult\" or \"perm_gens\"");
}

json presentation_to_json(const GroupPresentation& P) {
  json j;
  j["generators"] = P.generator_names;
  json relators = json::array();
  for (const Word& r : P.relators) {
    json word = json::array();
    for (int letter : r) {
      const std::string& name = P.generator_names[std::abs(letter) - 1];
      word.push_back(letter > 0 ? name : name + "^-1");
    }
    relators.push_back(word);
  }
  j["relators"] = relators;
  return j;
}

GroupPresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("relators"))
    throw ParseError("presentation JSON needs \"generators\" and \"relators\"");
  std::vector<std::string> names;
  std::vector<Word> relators;
  try {
    names = j.at("generators").get<std::vector<std::string>>();
    for (const json& rel : j.at("relators")) {
      Word word;
      for (const json& tok : rel) {
        std::string t = tok.get<std::string>();
        int sign = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
          sign = -1;
          t = t.substr(0, t.size() - 3);
        }
        auto it = std::find(names.begin(), names.end(), t);
        if (it == names.end()) throw ParseError("unknown generator: " + t);
        word.push_back(sign * (static_cast<int>(it - names.begin()) + 1));
      }
      relators.push_back(std::move(word));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad presentation JSON: ") + e.what());
  }
  return make_presentation(std::move(names), std::move(relators));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse failure in ") + path + ": " + e.what());
  }
}

}  // namespace qf
