#include "dwfs/harness.h"

#include "dwfs/error.h"
#include "dwfs/json_io.h"
#include "dwfs/parser.h"

#include <algorithm>
#include <random>

namespace dwfs {

namespace {

std::string atom_name(std::size_t i) {
    if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
    }
    return "p" + std::to_string(i);
}

AtomSet sample(std::mt19937_64& rng, const std::vector<Atom>& atoms, std::size_t k) {
    std::vector<Atom> out;
    std::sample(atoms.begin(), atoms.end(), std::back_inserter(out), k, rng);
    return AtomSet(std::move(out));
}

std::shared_ptr<AtomTable> table_of(std::size_t n, std::vector<Atom>& atoms) {
    auto table = std::make_shared<AtomTable>();
    for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back(table->intern(atom_name(i)));
    }
    return table;
}

} // namespace

Program random_program(const GeneratorConfig& cfg) {
    if (cfg.num_atoms == 0 || cfg.max_head == 0) {
        throw PreconditionError("generator needs at least one atom and max_head >= 1");
    }
    std::mt19937_64 rng(cfg.seed);
    std::vector<Atom> atoms;
    auto table = table_of(cfg.num_atoms, atoms);
    const auto n = atoms.size();
    auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
    std::bernoulli_distribution widen(0.35);
    std::bernoulli_distribution negative(cfg.neg_probability);

    std::vector<Rule> rules;
    const auto count = uniform(0, cfg.num_rules);
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t head = 1;
        while (head < std::min(cfg.max_head, n) && widen(rng)) {
            ++head;
        }
        std::size_t npos = 0;
        std::size_t nneg = 0;
        const auto body = uniform(0, std::min(cfg.max_body, cfg.max_pos_body + cfg.max_neg_body));
        for (std::size_t k = 0; k < body; ++k) {
            bool neg = negative(rng);
            if (neg && nneg < std::min(cfg.max_neg_body, n)) {
                ++nneg;
            }
            else if (npos < std::min(cfg.max_pos_body, n)) {
                ++npos;
            }
        }
        rules.push_back({sample(rng, atoms, head), sample(rng, atoms, npos), sample(rng, atoms, nneg)});
    }
    return Program(std::move(table), std::move(rules));
}

std::vector<Program> fuzz_corpus(const GeneratorConfig& cfg, std::size_t count) {
    std::vector<Program> out;
    if (count > 0) {
        out.emplace_back();
    }
    if (count > 1) {
        std::vector<Atom> atoms;
        auto table = table_of(cfg.num_atoms, atoms);
        std::vector<Rule> facts;
        std::size_t width = std::max<std::size_t>(1, std::min<std::size_t>(2, cfg.max_head));
        for (std::size_t i = 0; i < atoms.size(); i += width) {
            AtomSet head;
            for (std::size_t j = i; j < std::min(i + width, atoms.size()); ++j) {
                head.insert(atoms[j]);
            }
            facts.push_back({std::move(head), {}, {}});
        }
        out.emplace_back(std::move(table), std::move(facts));
    }
    std::seed_seq seq{cfg.seed, std::uint64_t{0x9e3779b97f4a7c15}};
    std::vector<std::uint64_t> seeds(count);
    seq.generate(seeds.begin(), seeds.end());
    for (std::size_t i = out.size(); i < count; ++i) {
        auto c = cfg;
        c.seed = seeds[i];
        out.push_back(random_program(c));
    }
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// Oracles
/////////////////////////////////////////////////////////////////////////////////////////
std::vector<AtomSet> minimal_models(const Program& p, std::size_t bound) {
    if (!p.is_positive()) {
        throw PreconditionError("minimal_models requires a positive program");
    }
    const auto n = p.base().size();
    if (n > bound) {
        throw CapacityError("minimal model oracle", n, bound);
    }
    const auto atoms = p.base().atoms();
    auto mask_of = [&](const AtomSet& s) {
        std::uint64_t m = 0;
        for (auto a : s) {
            m |= std::uint64_t{1} << (std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
        }
        return m;
    };
    std::vector<std::pair<std::uint64_t, std::uint64_t>> clauses;
    for (const auto& r : p.rules()) {
        clauses.emplace_back(mask_of(r.pos), mask_of(r.head));
    }
    std::vector<std::uint64_t> models;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        bool ok = std::all_of(clauses.begin(), clauses.end(),
                              [&](const auto& c) { return (c.first & ~m) != 0 || (c.second & m) != 0; });
        if (ok) {
            models.push_back(m);
        }
    }
    std::vector<AtomSet> out;
    for (auto m : models) {
        bool minimal = std::none_of(models.begin(), models.end(),
                                    [&](std::uint64_t o) { return o != m && (o & ~m) == 0; });
        if (minimal) {
            std::vector<Atom> s;
            for (std::size_t i = 0; i < n; ++i) {
                if (m >> i & 1u) {
                    s.push_back(atoms[i]);
                }
            }
            out.emplace_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AtomSet gcwa_negatives(const Program& p, std::size_t bound) {
    AtomSet somewhere_true;
    for (const auto& m : minimal_models(p, bound)) {
        somewhere_true |= m;
    }
    return p.base() - somewhere_true;
}

namespace {
// Least model of the normal rules whose negative body avoids `assumed_true`.
AtomSet gl_least_model(const Program& p, const AtomSet& assumed_true) {
    AtomSet m;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : p.rules()) {
            if (!r.neg.intersects(assumed_true) && r.pos.subset_of(m) && !m.contains(r.head.front())) {
                m.insert(r.head.front());
                changed = true;
            }
        }
    }
    return m;
}
} // namespace

ModelState normal_wfs(const Program& p) {
    if (!p.is_normal()) {
        throw PreconditionError("normal_wfs requires single-atom heads");
    }
    AtomSet t;
    for (;;) {
        auto next = gl_least_model(p, gl_least_model(p, t));
        if (next == t) {
            break;
        }
        t = std::move(next);
    }
    DisjunctionSet units;
    for (auto a : t) {
        units.push_back(AtomSet::single(a));
    }
    return ModelState(std::move(units), p.base() - gl_least_model(p, t));
}

/////////////////////////////////////////////////////////////////////////////////////////
// Equivalence
/////////////////////////////////////////////////////////////////////////////////////////
std::string_view to_string(Semantics s) {
    switch (s) {
        case Semantics::Wfds: return "wfds";
        case Semantics::WfdsRaw: return "wfds-raw";
        case Semantics::DwfsStar: return "dwfs-star";
        case Semantics::DwfsClassic: return "dwfs-classic";
        case Semantics::Uwfs: return "uwfs";
    }
    return "?";
}

std::optional<Semantics> semantics_from_string(std::string_view name) {
    for (auto s : {Semantics::Wfds, Semantics::WfdsRaw, Semantics::DwfsStar, Semantics::DwfsClassic, Semantics::Uwfs}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

ModelState compute(const Program& p, Semantics s, const Bounds& bounds) {
    switch (s) {
        case Semantics::Wfds: return wfds(p, DerivationEngine::Canonical, bounds.hypothesis_bound);
        case Semantics::WfdsRaw: return wfds(p, DerivationEngine::Raw, bounds.hypothesis_bound);
        case Semantics::DwfsStar: return dwfs_star(p, bounds.lft_capacity);
        case Semantics::DwfsClassic: return dwfs_classic(p, bounds.lft_capacity);
        case Semantics::Uwfs: return uwfs(p, bounds.unfounded);
    }
    throw PreconditionError("unknown semantics");
}

std::optional<PureDisjunction> distinguishing_disjunction(const ModelState& a, const ModelState& b) {
    // Closures are generated by the cores, so a difference shows on a core member.
    std::optional<PureDisjunction> best;
    auto offer = [&](PureDisjunction d) {
        if (!best || d.atoms.size() < best->atoms.size()
            || (d.atoms.size() == best->atoms.size() && d.atoms < best->atoms)) {
            best = std::move(d);
        }
    };
    for (auto x : a.false_atoms() - b.false_atoms()) {
        offer(PureDisjunction::negative(AtomSet::single(x)));
    }
    for (auto x : b.false_atoms() - a.false_atoms()) {
        offer(PureDisjunction::negative(AtomSet::single(x)));
    }
    for (const auto& d : a.pos()) {
        if (!state_satisfies_positive(b, d)) {
            offer(PureDisjunction::positive(d));
        }
    }
    for (const auto& d : b.pos()) {
        if (!state_satisfies_positive(a, d)) {
            offer(PureDisjunction::positive(d));
        }
    }
    return best;
}

namespace {

struct Computed {
    std::map<Semantics, ModelState> states;
    std::map<Semantics, std::string> errors;
    std::optional<Divergence> divergence;
};

Computed run_all(const Program& p, const Bounds& bounds, const std::vector<Semantics>& which) {
    Computed c;
    for (auto s : which) {
        try {
            c.states.emplace(s, compute(p, s, bounds));
        }
        catch (const CapacityError& e) {
            c.errors.emplace(s, e.what());
        }
    }
    for (std::size_t i = 0; i < which.size() && !c.divergence; ++i) {
        for (std::size_t j = i + 1; j < which.size() && !c.divergence; ++j) {
            auto a = c.states.find(which[i]);
            auto b = c.states.find(which[j]);
            if (a == c.states.end() || b == c.states.end()) {
                continue;
            }
            if (auto w = distinguishing_disjunction(a->second, b->second)) {
                c.divergence = Divergence{which[i], which[j], *w};
            }
        }
    }
    return c;
}

} // namespace

EquivalenceReport check_equivalence(const Program& p, const Bounds& bounds, const std::vector<Semantics>& which,
                                    bool shrink_divergence) {
    auto c = run_all(p, bounds, which);
    EquivalenceReport r{p, std::move(c.states), std::move(c.errors), !c.divergence, c.divergence, std::nullopt};
    if (r.first_divergence && shrink_divergence) {
        const auto pair = std::vector<Semantics>{r.first_divergence->first, r.first_divergence->second};
        r.shrunk = shrink_program(p, [&](const Program& q) { return run_all(q, bounds, pair).divergence.has_value(); });
    }
    return r;
}

Program shrink_program(const Program& p, const std::function<bool(const Program&)>& keeps) {
    auto rules = p.rules();
    auto attempt = [&](std::vector<Rule> candidate) {
        Program q(p.symbols(), candidate);
        if (keeps(q)) {
            rules = std::move(candidate);
            return true;
        }
        return false;
    };
    for (bool progress = true; progress;) {
        progress = false;
        for (std::size_t i = 0; i < rules.size() && !progress; ++i) {
            auto c = rules;
            c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
            progress = attempt(std::move(c));
        }
        for (std::size_t i = 0; i < rules.size() && !progress; ++i) {
            const auto r = rules[i];
            for (auto x : r.pos) {
                auto c = rules;
                c[i].pos.erase(x);
                if ((progress = attempt(std::move(c)))) {
                    break;
                }
            }
            for (auto x : r.neg) {
                if (progress) {
                    break;
                }
                auto c = rules;
                c[i].neg.erase(x);
                progress = attempt(std::move(c));
            }
            for (auto x : r.head) {
                if (progress || r.head.size() == 1) {
                    break;
                }
                auto c = rules;
                c[i].head.erase(x);
                progress = attempt(std::move(c));
            }
        }
    }
    return Program(p.symbols(), rules);
}

nlohmann::json report_to_json(const EquivalenceReport& r) {
    nlohmann::json states = nlohmann::json::object();
    for (const auto& [s, st] : r.states) {
        states[std::string(to_string(s))] = state_to_json(r.program, st);
    }
    nlohmann::json j = {{"program", render_program(r.program)}, {"equal", r.equal}, {"states", states}};
    if (!r.errors.empty()) {
        nlohmann::json errors = nlohmann::json::object();
        for (const auto& [s, e] : r.errors) {
            errors[std::string(to_string(s))] = e;
        }
        j["errors"] = errors;
    }
    if (r.first_divergence) {
        const auto& d = *r.first_divergence;
        auto w = d.witness.polarity == Polarity::Positive ? render_disjunction(r.program, d.witness.atoms)
                                                          : "not " + render_disjunction(r.program, d.witness.atoms);
        j["first_divergence"] = {{"pair", {to_string(d.first), to_string(d.second)}}, {"witness", w}};
    }
    if (r.shrunk) {
        j["shrunk"] = render_program(*r.shrunk);
    }
    return j;
}

} // namespace dwfs
