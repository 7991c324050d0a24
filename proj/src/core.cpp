#include "dwfs/core.h"

#include "dwfs/error.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace dwfs {

std::vector<AtomSet> subsets_by_size(const AtomSet& universe) {
    const auto n = universe.size();
    if (n >= 63) {
        throw CapacityError("subset enumeration", n, 62);
    }
    std::vector<std::uint64_t> masks(std::size_t{1} << n);
    for (std::uint64_t m = 0; m < masks.size(); ++m) {
        masks[m] = m;
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::vector<AtomSet> out;
    out.reserve(masks.size());
    auto atoms = universe.atoms();
    for (auto m : masks) {
        std::vector<Atom> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (m >> i & 1u) {
                s.push_back(atoms[i]);
            }
        }
        out.emplace_back(std::move(s));
    }
    return out;
}

/////////////////////////////////////////////////////////////////////////////////////////
// AtomTable / Program
/////////////////////////////////////////////////////////////////////////////////////////
Atom AtomTable::intern(std::string_view name) {
    auto key = std::string(name);
    if (auto it = ids_.find(key); it != ids_.end()) {
        return it->second;
    }
    auto a = atom(static_cast<std::uint32_t>(names_.size()));
    names_.push_back(key);
    ids_.emplace(std::move(key), a);
    return a;
}

std::optional<Atom> AtomTable::find(std::string_view name) const {
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
        return it->second;
    }
    return std::nullopt;
}

Program::Program() : symbols_(std::make_shared<AtomTable>()) {}

Program::Program(std::shared_ptr<const AtomTable> symbols, std::vector<Rule> rules, const AtomSet& extra_base)
    : symbols_(std::move(symbols))
    , rules_(std::move(rules))
    , base_(extra_base) {
    if (!symbols_) {
        throw PreconditionError("program without symbol table");
    }
    std::sort(rules_.begin(), rules_.end());
    rules_.erase(std::unique(rules_.begin(), rules_.end()), rules_.end());
    for (const auto& r : rules_) {
        if (r.head.empty()) {
            throw PreconditionError("rule with empty head");
        }
        base_ |= r.atoms();
    }
    for (auto a : base_) {
        if (index(a) >= symbols_->size()) {
            throw PreconditionError("atom id outside symbol table");
        }
    }
}

bool Program::contains(const Rule& r) const { return std::binary_search(rules_.begin(), rules_.end(), r); }

bool Program::is_positive() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_positive(); });
}
bool Program::is_normal() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.head.size() == 1; });
}
bool Program::is_negative() const {
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.is_negative(); });
}

AtomSet Program::heads() const {
    AtomSet h;
    for (const auto& r : rules_) {
        h |= r.head;
    }
    return h;
}

Program Program::with_rules(std::vector<Rule> rules) const { return Program(symbols_, std::move(rules), base_); }

namespace {
using NamedSet = std::set<std::string>;
struct NamedRule {
    NamedSet head, pos, neg;
    auto operator<=>(const NamedRule&) const = default;
};

NamedSet named(const Program& p, const AtomSet& s) {
    NamedSet out;
    for (auto a : s) {
        out.insert(p.name(a));
    }
    return out;
}

std::set<NamedRule> named_rules(const Program& p) {
    std::set<NamedRule> out;
    for (const auto& r : p.rules()) {
        out.insert({named(p, r.head), named(p, r.pos), named(p, r.neg)});
    }
    return out;
}
} // namespace

bool operator==(const Program& a, const Program& b) {
    if (a.symbols_ == b.symbols_) {
        return a.rules_ == b.rules_ && a.base_ == b.base_;
    }
    return named(a, a.base_) == named(b, b.base_) && named_rules(a) == named_rules(b);
}

/////////////////////////////////////////////////////////////////////////////////////////
// Disjunctions / states
/////////////////////////////////////////////////////////////////////////////////////////
DisjunctionSet normalize(DisjunctionSet ds) {
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

DisjunctionSet canonicalize(DisjunctionSet ds) {
    ds = normalize(std::move(ds));
    // Shorter disjunctions first so every potential subsumer is already kept.
    std::vector<const AtomSet*> by_size;
    by_size.reserve(ds.size());
    for (const auto& d : ds) {
        by_size.push_back(&d);
    }
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const AtomSet* a, const AtomSet* b) { return a->size() < b->size(); });
    DisjunctionSet kept;
    for (const auto* d : by_size) {
        bool subsumed = std::any_of(kept.begin(), kept.end(), [&](const AtomSet& k) { return k.subset_of(*d); });
        if (!subsumed) {
            kept.push_back(*d);
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

ModelState::ModelState(DisjunctionSet pos, AtomSet false_atoms)
    : pos_(canonicalize(std::move(pos)))
    , false_(std::move(false_atoms)) {
    if (std::any_of(pos_.begin(), pos_.end(), [](const AtomSet& d) { return d.empty(); })) {
        throw PreconditionError("empty positive disjunction in model state");
    }
}

AtomSet ModelState::true_atoms() const {
    AtomSet out;
    for (const auto& d : pos_) {
        if (d.size() == 1) {
            out.insert(d.front());
        }
    }
    return out;
}

bool state_satisfies_positive(const ModelState& s, const AtomSet& d) {
    return std::any_of(s.pos().begin(), s.pos().end(), [&](const AtomSet& m) { return m.subset_of(d); });
}

bool state_satisfies(const ModelState& s, const PureDisjunction& d) {
    if (d.atoms.empty()) {
        return false;
    }
    if (d.polarity == Polarity::Positive) {
        return state_satisfies_positive(s, d.atoms);
    }
    return d.atoms.intersects(s.false_atoms());
}

bool state_consistent(const ModelState& s) {
    for (const auto& d : s.pos()) {
        if (d.subset_of(s.false_atoms())) {
            return false;
        }
    }
    return true;
}

bool state_included(const ModelState& s, const ModelState& t) {
    // Both closures are generated by the cores, so comparing generators suffices.
    return s.false_atoms().subset_of(t.false_atoms())
        && std::all_of(s.pos().begin(), s.pos().end(), [&](const AtomSet& d) { return state_satisfies_positive(t, d); });
}

Truth body_status(const ModelState& s, const Rule& r) {
    const auto units = s.true_atoms();
    if (r.pos.subset_of(units) && r.neg.subset_of(s.false_atoms())) {
        return Truth::True;
    }
    if (r.pos.intersects(s.false_atoms()) || r.neg.intersects(units)) {
        return Truth::False;
    }
    if (std::any_of(s.pos().begin(), s.pos().end(), [&](const AtomSet& d) { return d.subset_of(r.neg); })) {
        return Truth::False;
    }
    return Truth::Undefined;
}

Hypothesis::Hypothesis(AtomSet lits, std::vector<AtomSet> disj) : literals(std::move(lits)) {
    for (auto& d : disj) {
        if (d.size() == 1) {
            literals.insert(d.front());
        }
        else if (!d.empty()) {
            disjunctive.push_back(std::move(d));
        }
    }
    disjunctive = normalize(std::move(disjunctive));
}

} // namespace dwfs
