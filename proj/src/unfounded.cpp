#include "dwfs/unfounded.h"

#include "dwfs/error.h"

#include <algorithm>

namespace dwfs {

namespace {
bool blocked_outside(const ModelState& s, const Rule& r, const AtomSet& outside_head) {
    return state_satisfies_positive(s, outside_head | r.neg);
}
} // namespace

bool is_unfounded(const Program& p, const ModelState& s, const AtomSet& x) {
    for (const auto& r : p.rules()) {
        if (!r.head.intersects(x)) {
            continue;
        }
        if (r.pos.intersects(x) || body_status(s, r) == Truth::False) {
            continue;
        }
        if (!blocked_outside(s, r, r.head - x)) {
            return false;
        }
    }
    return true;
}

std::vector<AtomSet> enumerate_unfounded(const Program& p, const ModelState& s, std::size_t bound) {
    if (p.base().size() > bound) {
        throw CapacityError("unfounded-set oracle", p.base().size(), bound);
    }
    std::vector<AtomSet> out;
    for (auto& x : subsets_by_size(p.base())) {
        if (is_unfounded(p, s, x)) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

std::optional<AtomSet> unfounded_union_oracle(const Program& p, const ModelState& s, std::size_t bound) {
    AtomSet u;
    for (const auto& x : enumerate_unfounded(p, s, bound)) {
        u |= x;
    }
    if (!is_unfounded(p, s, u)) {
        return std::nullopt;
    }
    return u;
}

namespace {

// Superset of every unfounded set: a is dropped once some rule for a can be
// blocked by no unfounded X inside the current candidate.
AtomSet unfounded_upper_bound(const Program& p, const ModelState& s) {
    auto x = p.base();
    for (bool changed = true; changed;) {
        changed = false;
        for (auto a : AtomSet(x)) {
            for (const auto& r : p.rules()) {
                if (!r.head.contains(a) || r.pos.intersects(x) || body_status(s, r) == Truth::False) {
                    continue;
                }
                if (!blocked_outside(s, r, r.head.without(a))) {
                    x.erase(a);
                    changed = true;
                    break;
                }
            }
        }
    }
    return x;
}

} // namespace

std::optional<AtomSet> greatest_unfounded(const Program& p, const ModelState& s, const UnfoundedOptions& opts) {
    std::optional<AtomSet> result;
    auto x = unfounded_upper_bound(p, s);
    const bool in_bound = p.base().size() <= opts.oracle_bound;
    if (is_unfounded(p, s, x)) {
        result = std::move(x);
    }
    else if (in_bound) {
        return unfounded_union_oracle(p, s, opts.oracle_bound);
    }
    else {
        throw Error("greatest unfounded set undecided: elimination result is not unfounded and the base ("
                    + std::to_string(p.base().size()) + " atoms) exceeds the oracle bound");
    }
    if (opts.cross_check && in_bound && unfounded_union_oracle(p, s, opts.oracle_bound) != result) {
        throw Error("greatest unfounded set disagrees with the exhaustive oracle");
    }
    return result;
}

DisjunctionSet t_operator(const Program& p, const ModelState& s) {
    DisjunctionSet out;
    for (const auto& r : p.rules()) {
        if (body_status(s, r) == Truth::True) {
            auto rest = r.head - s.false_atoms();
            if (!rest.empty()) {
                out.push_back(std::move(rest));
            }
        }
    }
    return canonicalize(std::move(out));
}

ModelState w_operator(const Program& p, const ModelState& s, const UnfoundedOptions& opts) {
    auto u = greatest_unfounded(p, s, opts);
    if (!u) {
        throw UndefinedOperatorError("W_P undefined: no greatest unfounded set for this state");
    }
    auto pos = s.pos();
    auto t = t_operator(p, s);
    pos.insert(pos.end(), t.begin(), t.end());
    return ModelState(std::move(pos), s.false_atoms() | *u);
}

UwfsTrace uwfs_trace(const Program& p, const UnfoundedOptions& opts) {
    UwfsTrace tr;
    tr.chain.emplace_back();
    for (;;) {
        auto next = w_operator(p, tr.chain.back(), opts);
        if (next == tr.chain.back()) {
            break;
        }
        tr.chain.push_back(std::move(next));
    }
    tr.result = tr.chain.back();
    return tr;
}

ModelState uwfs(const Program& p, const UnfoundedOptions& opts) { return uwfs_trace(p, opts).result; }

} // namespace dwfs
