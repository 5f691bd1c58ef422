#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cpar/characters.hpp"
#include "cpar/diagrams.hpp"
#include "cpar/ribbon.hpp"
#include "cpar/rs.hpp"
#include "cpar/scalars.hpp"

namespace cpar {

struct JsonError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using nlohmann::json;

// {"r","k","l","blocks":[{"top":[..],"bot":[..],"c":int}]}
json to_json(const Diagram& d);
Diagram diagram_from_json(const json& j);

json to_json(const Monomial& m);
json to_json(const RSPair& x);
RSPair rs_from_json(const json& j);

// {"r", "shapes": chain of shapes, "labels", "grid"}
json to_json(const RibbonTableau& t);
json to_json(const SWPair& x);

json to_json(const Multipartition& m);
Multipartition multipartition_from_json(const json& j);
Partition partition_from_json(const json& j);

json to_json(const PolyMatrix& m);

}  // namespace cpar
