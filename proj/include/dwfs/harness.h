#pragma once

#include "dwfs/argumentation.h"
#include "dwfs/core.h"
#include "dwfs/residual.h"
#include "dwfs/unfounded.h"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dwfs {

inline constexpr std::size_t default_model_oracle_bound = 20;

struct GeneratorConfig {
    std::uint64_t seed = 0;
    std::size_t num_atoms = 5;
    std::size_t num_rules = 6;
    std::size_t max_head = 3;
    std::size_t max_pos_body = 3;
    std::size_t max_neg_body = 3;
    std::size_t max_body = 3; // total body literals
    double neg_probability = 0.3;
};

// Deterministic in cfg.  Up to num_rules rules over atoms a, b, c, ...
// Head sizes skew towards 1; each body literal is negative with neg_probability.
Program random_program(const GeneratorConfig& cfg);

// `count` programs for a fuzz run: the empty program, an all-facts program,
// then random programs seeded from cfg.seed.
std::vector<Program> fuzz_corpus(const GeneratorConfig& cfg, std::size_t count);

// Oracles, independent of the semantics modules.
std::vector<AtomSet> minimal_models(const Program& p, std::size_t bound = default_model_oracle_bound);
AtomSet gcwa_negatives(const Program& p, std::size_t bound = default_model_oracle_bound);
// Alternating fixpoint over the Gelfond-Lifschitz reduct; normal programs only.
ModelState normal_wfs(const Program& p);

enum class Semantics { Wfds, WfdsRaw, DwfsStar, DwfsClassic, Uwfs };

std::string_view to_string(Semantics s);
std::optional<Semantics> semantics_from_string(std::string_view name);

// The four routes whose equality is checked by default.
inline const std::vector<Semantics> equivalence_semantics = {
    Semantics::Wfds, Semantics::WfdsRaw, Semantics::DwfsStar, Semantics::Uwfs};

struct Bounds {
    std::size_t hypothesis_bound = default_hypothesis_bound;
    std::size_t lft_capacity = default_lft_capacity;
    UnfoundedOptions unfounded{};
};

ModelState compute(const Program& p, Semantics s, const Bounds& bounds = {});

// Smallest pure disjunction over `base` satisfied by exactly one of a, b.
std::optional<PureDisjunction> distinguishing_disjunction(const ModelState& a, const ModelState& b);

struct Divergence {
    Semantics first;
    Semantics second;
    PureDisjunction witness;
};

struct EquivalenceReport {
    Program program;
    std::map<Semantics, ModelState> states;
    std::map<Semantics, std::string> errors; // capacity errors, per semantics
    bool equal = true;
    std::optional<Divergence> first_divergence;
    std::optional<Program> shrunk; // minimized witness program when divergent
};

EquivalenceReport check_equivalence(const Program& p, const Bounds& bounds = {},
                                    const std::vector<Semantics>& which = equivalence_semantics,
                                    bool shrink_divergence = true);

// Greedy minimization: drop rules, then body literals, then head atoms, while
// `keeps` holds.
Program shrink_program(const Program& p, const std::function<bool(const Program&)>& keeps);

nlohmann::json report_to_json(const EquivalenceReport& r);

} // namespace dwfs
