#pragma once

#include "dwfs/atom_set.h"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dwfs {

/////////////////////////////////////////////////////////////////////////////////////////
// Atoms and programs
/////////////////////////////////////////////////////////////////////////////////////////

// Bijective name <-> id interning.  Ids are handed out in first-seen order.
class AtomTable {
public:
    Atom intern(std::string_view name);
    std::optional<Atom> find(std::string_view name) const;
    const std::string& name(Atom a) const { return names_.at(index(a)); }
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Atom> ids_;
};

// a1 | ... | an :- b1, ..., bm, not c1, ..., not ct.   (n > 0)
struct Rule {
    AtomSet head;
    AtomSet pos;
    AtomSet neg;

    bool is_fact() const noexcept { return pos.empty() && neg.empty(); }
    bool is_positive() const noexcept { return neg.empty(); }
    bool is_negative() const noexcept { return pos.empty(); }
    AtomSet atoms() const { return head | pos | neg; }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

// Finite set of rules over an interned base.  The base always contains every
// atom referenced by a rule, and may contain more (atoms that were present in
// the program a derived one came from).
class Program {
public:
    Program();
    Program(std::shared_ptr<const AtomTable> symbols, std::vector<Rule> rules, const AtomSet& extra_base = {});

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const AtomSet& base() const noexcept { return base_; }
    const std::shared_ptr<const AtomTable>& symbols() const noexcept { return symbols_; }
    const std::string& name(Atom a) const { return symbols_->name(a); }
    bool empty() const noexcept { return rules_.empty(); }
    bool contains(const Rule& r) const;

    bool is_positive() const;
    bool is_normal() const;
    bool is_negative() const;
    AtomSet heads() const;

    // Same symbols and base, different rule set.
    Program with_rules(std::vector<Rule> rules) const;

    // Structural equality by atom names (independent of interning order).
    friend bool operator==(const Program& a, const Program& b);

private:
    std::shared_ptr<const AtomTable> symbols_;
    std::vector<Rule> rules_;
    AtomSet base_;
};

/////////////////////////////////////////////////////////////////////////////////////////
// Disjunctions and model states
/////////////////////////////////////////////////////////////////////////////////////////

// A positive disjunction is a nonempty atom set.
using PositiveDisjunction = AtomSet;
// Sorted, duplicate-free collection of positive disjunctions.
using DisjunctionSet = std::vector<PositiveDisjunction>;

enum class Polarity { Positive, Negative };

// a1 | ... | an  or  not a1 | ... | not an.
struct PureDisjunction {
    Polarity polarity;
    AtomSet atoms;

    static PureDisjunction positive(AtomSet a) { return {Polarity::Positive, std::move(a)}; }
    static PureDisjunction negative(AtomSet a) { return {Polarity::Negative, std::move(a)}; }
    friend bool operator==(const PureDisjunction&, const PureDisjunction&) = default;
};

// Sort + dedupe.
DisjunctionSet normalize(DisjunctionSet ds);

// Members not strictly subsumed by another member.
DisjunctionSet canonicalize(DisjunctionSet ds);

// a is a sub-disjunction of b.
inline bool subsumes(const PositiveDisjunction& a, const PositiveDisjunction& b) { return a.subset_of(b); }

// Model state held by its canonical core: positive disjunctions with no
// member subsuming another, plus the atoms assumed false.  The closure under
// super-disjunctions is implicit and answered by state_satisfies().
class ModelState {
public:
    ModelState() = default;
    ModelState(DisjunctionSet pos, AtomSet false_atoms);

    const DisjunctionSet& pos() const noexcept { return pos_; }
    const AtomSet& false_atoms() const noexcept { return false_; }
    bool empty() const noexcept { return pos_.empty() && false_.empty(); }

    // Atoms occurring as unit members of pos.
    AtomSet true_atoms() const;

    friend bool operator==(const ModelState&, const ModelState&) = default;

private:
    DisjunctionSet pos_;
    AtomSet false_;
};

bool state_satisfies(const ModelState& s, const PureDisjunction& d);
bool state_satisfies_positive(const ModelState& s, const AtomSet& d);
bool state_consistent(const ModelState& s);

// Every pure disjunction satisfied by s is satisfied by t.
bool state_included(const ModelState& s, const ModelState& t);

enum class Truth { True, False, Undefined };

Truth body_status(const ModelState& s, const Rule& r);

// Assumption sets.  Only literal assumptions take part in derivations.
struct Hypothesis {
    AtomSet literals;                  // each a means "not a"
    std::vector<AtomSet> disjunctive;  // each {a1..am}, m >= 2, means "not a1 | ... | not am"

    Hypothesis() = default;
    explicit Hypothesis(AtomSet lits, std::vector<AtomSet> disj = {});

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

} // namespace dwfs
