#pragma once

#include <string>

#include <json.hpp>

#include "qf/diagram.hpp"
#include "qf/fp_group.hpp"
#include "qf/group.hpp"
#include "qf/quandle.hpp"

namespace qf {

using nlohmann::json;

json quandle_to_json(const FiniteQuandle& Q);
FiniteQuandle quandle_from_json(const json& j);  // validates the table

json group_to_json(const FiniteGroup& G);
/// Accepts {"order", "mult"} or {"degree", "perm_gens"}; the latter is
/// closed into a table under the usual order cap.
FiniteGroup group_from_json(const json& j);

json presentation_to_json(const GroupPresentation& P);
GroupPresentation presentation_from_json(const json& j);

std::string read_file(const std::string& path);
json load_json(const std::string& path);  // ParseError on bad JSON

}  // namespace qf
