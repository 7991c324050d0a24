#include "dwfs/transforms.h"

#include "dwfs/error.h"
#include "dwfs/parser.h"

#include <algorithm>

namespace dwfs {

std::string_view to_string(TransformKind k) {
    switch (k) {
        case TransformKind::Unfolding: return "unfolding";
        case TransformKind::ElimTautology: return "tautology";
        case TransformKind::ElimSImplication: return "s-implication";
        case TransformKind::PositiveReduction: return "positive-reduction";
        case TransformKind::NegativeReduction: return "negative-reduction";
    }
    return "?";
}

bool is_s_implication(const Rule& r1, const Rule& r2) {
    if (r1 == r2) {
        return false;
    }
    // Moving more than D only shrinks neg(r1) \ C, so D is the weakest choice.
    auto moved = r2.head - r1.head;
    return moved.subset_of(r1.neg) && r2.pos.subset_of(r1.pos) && r2.neg.subset_of(r1.neg - moved);
}

namespace {

void push_unique(std::vector<TransformStep>& out, TransformStep s) {
    std::sort(s.removed.begin(), s.removed.end());
    std::sort(s.added.begin(), s.added.end());
    s.added.erase(std::unique(s.added.begin(), s.added.end()), s.added.end());
    if (std::find(out.begin(), out.end(), s) == out.end()) {
        out.push_back(std::move(s));
    }
}

} // namespace

std::vector<TransformStep> applicable(const Program& p, TransformKind kind) {
    std::vector<TransformStep> out;
    const auto& rules = p.rules();
    const auto heads = p.heads();
    for (const auto& r : rules) {
        switch (kind) {
            case TransformKind::Unfolding:
                for (auto b : r.pos) {
                    TransformStep s{kind, {r}, {}};
                    for (const auto& q : rules) {
                        if (q.head.contains(b)) {
                            s.added.push_back({r.head | q.head.without(b), r.pos.without(b) | q.pos, r.neg | q.neg});
                        }
                    }
                    push_unique(out, std::move(s));
                }
                break;
            case TransformKind::ElimTautology:
                if (r.head.intersects(r.pos)) {
                    push_unique(out, {kind, {r}, {}});
                }
                break;
            case TransformKind::ElimSImplication:
                if (std::any_of(rules.begin(), rules.end(), [&](const Rule& q) { return is_s_implication(r, q); })) {
                    push_unique(out, {kind, {r}, {}});
                }
                break;
            case TransformKind::PositiveReduction:
                for (auto c : r.neg) {
                    if (!heads.contains(c)) {
                        push_unique(out, {kind, {r}, {{r.head, r.pos, r.neg.without(c)}}});
                    }
                }
                break;
            case TransformKind::NegativeReduction:
                if (std::any_of(rules.begin(), rules.end(),
                                [&](const Rule& f) { return f.is_fact() && f.head.subset_of(r.neg); })) {
                    push_unique(out, {kind, {r}, {}});
                }
                break;
        }
    }
    return out;
}

std::vector<TransformStep> applicable(const Program& p) {
    std::vector<TransformStep> out;
    for (auto k : all_transform_kinds) {
        auto steps = applicable(p, k);
        out.insert(out.end(), steps.begin(), steps.end());
    }
    return out;
}

Program apply(const Program& p, const TransformStep& step) {
    if (step.removed.empty() && step.added.empty()) {
        return p;
    }
    auto normalized = step;
    std::sort(normalized.removed.begin(), normalized.removed.end());
    std::sort(normalized.added.begin(), normalized.added.end());
    normalized.added.erase(std::unique(normalized.added.begin(), normalized.added.end()), normalized.added.end());
    auto candidates = applicable(p, step.kind);
    if (std::find(candidates.begin(), candidates.end(), normalized) == candidates.end()) {
        throw PreconditionError("transformation step is not applicable to this program");
    }
    std::vector<Rule> rules;
    for (const auto& r : p.rules()) {
        if (std::find(step.removed.begin(), step.removed.end(), r) == step.removed.end()) {
            rules.push_back(r);
        }
    }
    rules.insert(rules.end(), step.added.begin(), step.added.end());
    return p.with_rules(std::move(rules));
}

bool bd_semantics_axioms(const ModelState& s, const Program& p) {
    if (canonicalize(s.pos()) != s.pos()) {
        return false;
    }
    for (const auto& r : p.rules()) {
        if (r.is_fact() && !state_satisfies_positive(s, r.head)) {
            return false;
        }
    }
    return (p.base() - p.heads()).subset_of(s.false_atoms());
}

std::string render_step(const Program& p, const TransformStep& step) {
    auto list = [&](const std::vector<Rule>& rules) {
        std::string out;
        for (const auto& r : rules) {
            if (!out.empty()) {
                out += ' ';
            }
            out += render_rule(p, r);
        }
        return out;
    };
    return std::string(to_string(step.kind)) + ": -[" + list(step.removed) + "] / +[" + list(step.added) + "]";
}

} // namespace dwfs
