#include "dwfs/fixpoint.h"

#include "dwfs/error.h"

#include <algorithm>
#include <set>

namespace dwfs {

namespace {

void require_positive(const Program& p) {
    if (!p.is_positive()) {
        throw PreconditionError("operator requires a positive program");
    }
}

// Premises per body atom, then the cartesian product.
void resolve(const Rule& r, const std::vector<std::vector<const AtomSet*>>& premises, std::size_t i,
             const AtomSet& acc, std::set<AtomSet>& out) {
    if (i == premises.size()) {
        out.insert(acc);
        return;
    }
    auto b = r.pos.atoms()[i];
    for (const auto* d : premises[i]) {
        resolve(r, premises, i + 1, acc | d->without(b), out);
    }
}

void step_into(const Program& p, const DisjunctionSet& j, std::set<AtomSet>& out) {
    for (const auto& r : p.rules()) {
        std::vector<std::vector<const AtomSet*>> premises(r.pos.size());
        bool blocked = false;
        for (std::size_t i = 0; i < r.pos.size() && !blocked; ++i) {
            auto b = r.pos.atoms()[i];
            for (const auto& d : j) {
                if (d.contains(b)) {
                    premises[i].push_back(&d);
                }
            }
            blocked = premises[i].empty();
        }
        if (!blocked) {
            resolve(r, premises, 0, r.head, out);
        }
    }
}

} // namespace

DisjunctionSet tps_step(const Program& p, const DisjunctionSet& j) {
    require_positive(p);
    std::set<AtomSet> out;
    step_into(p, j, out);
    return {out.begin(), out.end()};
}

DisjunctionSet tps_lfp(const Program& p) {
    require_positive(p);
    std::set<AtomSet> acc;
    DisjunctionSet j;
    for (;;) {
        auto before = acc.size();
        step_into(p, j, acc);
        if (acc.size() == before) {
            return j;
        }
        j.assign(acc.begin(), acc.end());
    }
}

DisjunctionSet least_model_state(const Program& p) { return canonicalize(tps_lfp(p)); }

bool entails_classical(const Program& p, const AtomSet& d, std::size_t bound) {
    require_positive(p);
    auto universe = p.base() | d;
    if (universe.size() > bound) {
        throw CapacityError("classical entailment oracle", universe.size(), bound);
    }
    const auto atoms = universe.atoms();
    auto bit = [&](Atom a) {
        return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) - atoms.begin());
    };
    auto mask_of = [&](const AtomSet& s) {
        std::uint64_t m = 0;
        for (auto a : s) {
            m |= std::uint64_t{1} << bit(a);
        }
        return m;
    };
    struct Clause {
        std::uint64_t head, body;
    };
    std::vector<Clause> clauses;
    for (const auto& r : p.rules()) {
        clauses.push_back({mask_of(r.head), mask_of(r.pos)});
    }
    const auto goal = mask_of(d);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << atoms.size()); ++m) {
        bool model = true;
        for (const auto& c : clauses) {
            if ((c.body & ~m) == 0 && (c.head & m) == 0) {
                model = false;
                break;
            }
        }
        if (model && (goal & m) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace dwfs
