#include "dwfs/argumentation.h"

#include "dwfs/error.h"
#include "dwfs/fixpoint.h"

#include <algorithm>

namespace dwfs {

Program reduct(const Program& p, const Hypothesis& delta) {
    std::vector<Rule> kept;
    for (const auto& r : p.rules()) {
        if (r.neg.subset_of(delta.literals)) {
            kept.push_back({r.head, r.pos, {}});
        }
    }
    return p.with_rules(std::move(kept));
}

Argumentation::Argumentation(Program p, DerivationEngine engine, std::size_t hypothesis_bound)
    : p_(std::move(p))
    , engine_(engine)
    , bound_(hypothesis_bound) {}

const DisjunctionSet& Argumentation::consequences(const AtomSet& delta) {
    auto it = cache_.find(delta);
    if (it == cache_.end()) {
        auto red = reduct(p_, Hypothesis(delta));
        auto e = engine_ == DerivationEngine::Canonical ? least_model_state(red) : tps_lfp(red);
        it = cache_.emplace(delta, std::move(e)).first;
    }
    return it->second;
}

bool Argumentation::derives(const AtomSet& delta, const AtomSet& a) {
    const auto& e = consequences(delta);
    return std::any_of(e.begin(), e.end(), [&](const AtomSet& b) { return a.subset_of(b) && (b - a).subset_of(delta); });
}

DisjunctionSet Argumentation::cons(const AtomSet& delta) {
    DisjunctionSet out;
    for (const auto& b : consequences(delta)) {
        auto rest = b - delta;
        if (!rest.empty()) {
            out.push_back(std::move(rest));
        }
        else {
            // Every unit of b is supported by cancelling the others.
            for (auto x : b) {
                out.push_back(AtomSet::single(x));
            }
        }
    }
    return canonicalize(std::move(out));
}

bool Argumentation::attacks_literals(const AtomSet& delta, const AtomSet& target) {
    const auto& e = consequences(delta);
    return std::any_of(e.begin(), e.end(),
                       [&](const AtomSet& b) { return b.intersects(target) && (b - target).subset_of(delta); });
}

std::optional<AttackWitness> Argumentation::attacks(const AtomSet& delta, const Hypothesis& target) {
    for (const auto& beta : target.disjunctive) {
        DisjunctionSet used;
        for (auto x : beta) {
            const auto& e = consequences(delta);
            auto hit = std::find_if(e.begin(), e.end(),
                                    [&](const AtomSet& b) { return b.contains(x) && b.without(x).subset_of(delta); });
            if (hit == e.end()) {
                break;
            }
            used.push_back(*hit);
        }
        if (used.size() == beta.size()) {
            return AttackWitness{AttackClause::Condition1, beta, normalize(std::move(used))};
        }
    }
    for (const auto& b : consequences(delta)) {
        if (b.intersects(target.literals) && (b - target.literals).subset_of(delta)) {
            return AttackWitness{AttackClause::Condition2, b & target.literals, {b}};
        }
    }
    return std::nullopt;
}

void Argumentation::check_bound() const {
    if (p_.base().size() > bound_) {
        throw CapacityError("attacker enumeration over base", p_.base().size(), bound_);
    }
}

bool Argumentation::admissible(const AtomSet& delta, Atom a) {
    check_bound();
    const auto unit = AtomSet::single(a);
    for (const auto& t : subsets_by_size(p_.base())) {
        // Attack is checked first: a counterattacked T never needs E(T).
        if (!attacks_literals(delta, t) && derives(t, unit)) {
            return false;
        }
    }
    return true;
}

AtomSet Argumentation::admissible_atoms(const AtomSet& delta) {
    check_bound();
    auto out = p_.base();
    for (const auto& t : subsets_by_size(p_.base())) {
        if (out.empty()) {
            break;
        }
        if (attacks_literals(delta, t)) {
            continue;
        }
        for (const auto& b : consequences(t)) {
            for (auto x : b) {
                if (out.contains(x) && b.without(x).subset_of(t)) {
                    out.erase(x);
                }
            }
        }
    }
    return out;
}

bool derives(const Program& p, const Hypothesis& delta, const AtomSet& a, DerivationEngine engine) {
    return Argumentation(p, engine).derives(delta.literals, a);
}

DisjunctionSet cons(const Program& p, const Hypothesis& delta, DerivationEngine engine) {
    return Argumentation(p, engine).cons(delta.literals);
}

std::optional<AttackWitness> attacks(const Program& p, const Hypothesis& delta, const Hypothesis& target,
                                     DerivationEngine engine) {
    return Argumentation(p, engine).attacks(delta.literals, target);
}

bool witness_holds(const Program& p, const Hypothesis& delta, const Hypothesis& target, const AttackWitness& w,
                   DerivationEngine engine) {
    Argumentation arg(p, engine);
    const auto& e = arg.consequences(delta.literals);
    auto in_e = [&](const AtomSet& b) { return std::binary_search(e.begin(), e.end(), b); };
    if (w.clause == AttackClause::Condition1) {
        if (std::find(target.disjunctive.begin(), target.disjunctive.end(), w.assumption) == target.disjunctive.end()) {
            return false;
        }
        return std::all_of(w.assumption.begin(), w.assumption.end(), [&](Atom x) {
            return std::any_of(w.derived.begin(), w.derived.end(), [&](const AtomSet& b) {
                return in_e(b) && b.contains(x) && b.without(x).subset_of(delta.literals);
            });
        });
    }
    if (w.assumption.empty() || !w.assumption.subset_of(target.literals) || w.derived.size() != 1) {
        return false;
    }
    const auto& b = w.derived.front();
    return in_e(b) && w.assumption.subset_of(b) && (b - w.assumption).subset_of(delta.literals);
}

bool self_consistent(const Program& p, const Hypothesis& delta) {
    return !attacks(p, delta, delta, DerivationEngine::Canonical).has_value();
}

bool admissible(const Program& p, const Hypothesis& delta, Atom a, DerivationEngine engine, std::size_t bound) {
    return Argumentation(p, engine, bound).admissible(delta.literals, a);
}

namespace {
WfdhTrace iterate_wfdh(Argumentation& arg) {
    WfdhTrace tr;
    AtomSet d;
    tr.chain.push_back(d);
    const auto rounds = arg.program().base().size() + 1;
    for (std::size_t k = 0;; ++k) {
        if (k == rounds) {
            tr.bound_hit = true;
            break;
        }
        auto next = arg.admissible_atoms(d);
        if (next == d) {
            break;
        }
        d = std::move(next);
        tr.chain.push_back(d);
    }
    tr.result = Hypothesis(d);
    return tr;
}
} // namespace

WfdhTrace wfdh_trace(const Program& p, DerivationEngine engine, std::size_t bound) {
    Argumentation arg(p, engine, bound);
    return iterate_wfdh(arg);
}

Hypothesis wfdh(const Program& p, DerivationEngine engine, std::size_t bound) {
    return wfdh_trace(p, engine, bound).result;
}

ModelState wfds(const Program& p, DerivationEngine engine, std::size_t bound) {
    Argumentation arg(p, engine, bound);
    auto d = iterate_wfdh(arg).result.literals;
    return ModelState(arg.cons(d), d);
}

} // namespace dwfs
