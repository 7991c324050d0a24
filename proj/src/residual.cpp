#include "dwfs/residual.h"

#include "dwfs/error.h"

#include <algorithm>
#include <optional>
#include <set>

namespace dwfs {

NegativeProgram::NegativeProgram(std::vector<ConditionalFact> facts) : facts_(std::move(facts)) {
    std::sort(facts_.begin(), facts_.end());
    facts_.erase(std::unique(facts_.begin(), facts_.end()), facts_.end());
    if (std::any_of(facts_.begin(), facts_.end(), [](const ConditionalFact& f) { return f.head.empty(); })) {
        throw PreconditionError("conditional fact with empty head");
    }
}

NegativeProgram NegativeProgram::from_program(const Program& p) {
    std::vector<ConditionalFact> facts;
    for (const auto& r : p.rules()) {
        if (!r.pos.empty()) {
            throw PreconditionError("not a negative program");
        }
        facts.push_back({r.head, r.neg});
    }
    return NegativeProgram(std::move(facts));
}

AtomSet NegativeProgram::heads() const {
    AtomSet h;
    for (const auto& f : facts_) {
        h |= f.head;
    }
    return h;
}

std::size_t NegativeProgram::literal_count() const {
    std::size_t n = 0;
    for (const auto& f : facts_) {
        n += f.head.size() + f.neg.size();
    }
    return n;
}

Program NegativeProgram::to_program(const Program& origin) const {
    std::vector<Rule> rules;
    rules.reserve(facts_.size());
    for (const auto& f : facts_) {
        rules.push_back(f.rule());
    }
    return origin.with_rules(std::move(rules));
}

namespace {

void resolve(const Rule& r, const std::vector<std::vector<const ConditionalFact*>>& premises, std::size_t i,
             ConditionalFact acc, std::set<ConditionalFact>& out) {
    if (i == premises.size()) {
        out.insert(std::move(acc));
        return;
    }
    auto b = r.pos.atoms()[i];
    for (const auto* c : premises[i]) {
        resolve(r, premises, i + 1, {acc.head | c->head.without(b), acc.neg | c->neg}, out);
    }
}

void tpg_into(const Program& p, const std::vector<ConditionalFact>& j, std::set<ConditionalFact>& out,
              std::size_t capacity) {
    for (const auto& r : p.rules()) {
        std::vector<std::vector<const ConditionalFact*>> premises(r.pos.size());
        bool blocked = false;
        for (std::size_t i = 0; i < r.pos.size() && !blocked; ++i) {
            auto b = r.pos.atoms()[i];
            for (const auto& c : j) {
                if (c.head.contains(b)) {
                    premises[i].push_back(&c);
                }
            }
            blocked = premises[i].empty();
        }
        if (!blocked) {
            resolve(r, premises, 0, {r.head, r.neg}, out);
        }
        if (out.size() > capacity) {
            throw CapacityError("least fixpoint transformation", out.size(), capacity);
        }
    }
}

AtomSet heads_of(const std::vector<ConditionalFact>& facts) {
    AtomSet h;
    for (const auto& f : facts) {
        h |= f.head;
    }
    return h;
}

template <class Reduce>
NegativeProgram reduce_to_fixpoint(NegativeProgram n, Reduce reduce, std::vector<NegativeProgram>* trace) {
    if (trace) {
        trace->push_back(n);
    }
    for (;;) {
        auto next = reduce(n);
        if (next == n) {
            return n;
        }
        n = std::move(next);
        if (trace) {
            trace->push_back(n);
        }
    }
}

ModelState read_off(const Program& p, const NegativeProgram& n) {
    DisjunctionSet pos;
    for (const auto& f : n.facts()) {
        if (f.neg.empty()) {
            pos.push_back(f.head);
        }
    }
    return ModelState(std::move(pos), p.base() - n.heads());
}

} // namespace

NegativeProgram tpg_step(const Program& p, const NegativeProgram& j) {
    std::set<ConditionalFact> out;
    tpg_into(p, j.facts(), out, static_cast<std::size_t>(-1));
    return NegativeProgram({out.begin(), out.end()});
}

NegativeProgram lft(const Program& p, std::size_t capacity) {
    std::set<ConditionalFact> acc;
    std::vector<ConditionalFact> j;
    for (;;) {
        auto before = acc.size();
        tpg_into(p, j, acc, capacity);
        if (acc.size() == before) {
            return NegativeProgram(std::move(j));
        }
        j.assign(acc.begin(), acc.end());
    }
}

NegativeProgram strong_reduction(const NegativeProgram& n) {
    const auto& facts = n.facts();
    const auto heads = heads_of(facts);
    std::vector<ConditionalFact> kept;
    for (const auto& f : facts) {
        const auto r = f.rule();
        bool implied = std::any_of(facts.begin(), facts.end(),
                                   [&](const ConditionalFact& g) { return is_s_implication(r, g.rule()); });
        if (!implied) {
            kept.push_back({f.head, f.neg & heads});
        }
    }
    return NegativeProgram(std::move(kept));
}

ResidualTrace strong_residual_trace(const Program& p, std::size_t capacity) {
    ResidualTrace tr;
    reduce_to_fixpoint(lft(p, capacity), strong_reduction, &tr.iterations);
    return tr;
}

NegativeProgram strong_residual(const Program& p, std::size_t capacity) {
    return reduce_to_fixpoint(lft(p, capacity), strong_reduction, nullptr);
}

ModelState dwfs_star(const Program& p, std::size_t capacity) { return read_off(p, strong_residual(p, capacity)); }

NegativeProgram classic_reduction(const NegativeProgram& n) {
    const auto& facts = n.facts();
    const auto heads = heads_of(facts);
    std::vector<ConditionalFact> kept;
    for (const auto& f : facts) {
        bool nonminimal = std::any_of(facts.begin(), facts.end(), [&](const ConditionalFact& g) {
            return g != f && g.head.subset_of(f.head) && g.neg.subset_of(f.neg);
        });
        bool refuted = std::any_of(facts.begin(), facts.end(), [&](const ConditionalFact& g) {
            return g.neg.empty() && g.head.subset_of(f.neg);
        });
        if (!nonminimal && !refuted) {
            kept.push_back({f.head, f.neg & heads});
        }
    }
    return NegativeProgram(std::move(kept));
}

NegativeProgram classic_residual(const Program& p, std::size_t capacity) {
    return reduce_to_fixpoint(lft(p, capacity), classic_reduction, nullptr);
}

ModelState dwfs_classic(const Program& p, std::size_t capacity) {
    return read_off(p, classic_residual(p, capacity));
}

Derivation derive_residual(const Program& p, std::size_t step_cap) {
    static constexpr TransformKind priority[] = {
        TransformKind::ElimTautology,    TransformKind::PositiveReduction, TransformKind::NegativeReduction,
        TransformKind::ElimSImplication, TransformKind::Unfolding,
    };
    Derivation d;
    d.programs.push_back(p);
    for (;;) {
        const auto& cur = d.programs.back();
        std::optional<TransformStep> next;
        for (auto k : priority) {
            auto steps = applicable(cur, k);
            if (!steps.empty()) {
                next = std::move(steps.front());
                break;
            }
        }
        if (!next) {
            return d;
        }
        if (d.steps.size() == step_cap) {
            d.step_cap_hit = true;
            return d;
        }
        auto after = apply(cur, *next);
        d.steps.push_back(std::move(*next));
        d.programs.push_back(std::move(after));
    }
}

} // namespace dwfs
