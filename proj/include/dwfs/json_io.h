#pragma once

#include "dwfs/core.h"

#include <json.hpp>

namespace dwfs {

// {"true_disjunctions": [["a","b"],["d"]], "false_atoms": ["c"], "undefined_atoms": ["e"]}
// undefined = base \ (unit-true atoms | false atoms).  Arrays are sorted by name.
nlohmann::json state_to_json(const Program& p, const ModelState& s);

// Inverse of state_to_json over p's symbols; unknown names are an error.
ModelState state_from_json(const Program& p, const nlohmann::json& j);

nlohmann::json atoms_to_json(const Program& p, const AtomSet& s);

} // namespace dwfs
