#include "dwfs/json_io.h"

#include "dwfs/error.h"

#include <algorithm>

namespace dwfs {

nlohmann::json atoms_to_json(const Program& p, const AtomSet& s) {
    std::vector<std::string> names;
    for (auto a : s) {
        names.push_back(p.name(a));
    }
    std::sort(names.begin(), names.end());
    return names;
}

nlohmann::json state_to_json(const Program& p, const ModelState& s) {
    std::vector<nlohmann::json> disj;
    for (const auto& d : s.pos()) {
        disj.push_back(atoms_to_json(p, d));
    }
    std::sort(disj.begin(), disj.end());
    auto undefined = p.base() - (s.true_atoms() | s.false_atoms());
    return {
        {"true_disjunctions", disj},
        {"false_atoms", atoms_to_json(p, s.false_atoms())},
        {"undefined_atoms", atoms_to_json(p, undefined)},
    };
}

namespace {
AtomSet atoms_from_json(const Program& p, const nlohmann::json& j) {
    AtomSet out;
    for (const auto& name : j) {
        auto a = p.symbols()->find(name.get<std::string>());
        if (!a) {
            throw PreconditionError("unknown atom '" + name.get<std::string>() + "' in state");
        }
        out.insert(*a);
    }
    return out;
}
} // namespace

ModelState state_from_json(const Program& p, const nlohmann::json& j) {
    DisjunctionSet pos;
    for (const auto& d : j.at("true_disjunctions")) {
        pos.push_back(atoms_from_json(p, d));
    }
    return ModelState(std::move(pos), atoms_from_json(p, j.at("false_atoms")));
}

} // namespace dwfs
