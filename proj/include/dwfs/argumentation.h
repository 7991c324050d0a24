#pragma once

#include "dwfs/core.h"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace dwfs {

inline constexpr std::size_t default_hypothesis_bound = 16;

enum class DerivationEngine {
    Canonical, // E(D) = can(ms(P_D+))
    Raw,       // E(D) = T^S_{P_D+} up to omega, no subsumption
};

enum class AttackClause { Condition1, Condition2 };

struct AttackWitness {
    AttackClause clause;
    // Condition1: the atoms of the attacked disjunctive assumption.
    // Condition2: the attacked literal assumptions b1..bm.
    AtomSet assumption;
    // Members of E(attacker) establishing the derivation(s).
    DisjunctionSet derived;
};

// Rules whose negative body lies inside delta's literal assumptions, with the
// negative body dropped.
Program reduct(const Program& p, const Hypothesis& delta);

// Supporting-hypothesis queries with a per-hypothesis cache of E(D).
// Only the literal assumptions of a hypothesis matter, so the cache is keyed
// by them.
class Argumentation {
public:
    explicit Argumentation(Program p, DerivationEngine engine = DerivationEngine::Canonical,
                           std::size_t hypothesis_bound = default_hypothesis_bound);

    const Program& program() const noexcept { return p_; }
    DerivationEngine engine() const noexcept { return engine_; }

    const DisjunctionSet& consequences(const AtomSet& delta);
    bool derives(const AtomSet& delta, const AtomSet& a);
    DisjunctionSet cons(const AtomSet& delta);
    std::optional<AttackWitness> attacks(const AtomSet& delta, const Hypothesis& target);
    bool attacks_literals(const AtomSet& delta, const AtomSet& target);
    bool admissible(const AtomSet& delta, Atom a);
    // { a in base | admissible(delta, a) }: one pass of A_P on the literal core.
    AtomSet admissible_atoms(const AtomSet& delta);

private:
    void check_bound() const;

    Program p_;
    DerivationEngine engine_;
    std::size_t bound_;
    std::map<AtomSet, DisjunctionSet> cache_;
};

bool derives(const Program& p, const Hypothesis& delta, const AtomSet& a,
             DerivationEngine engine = DerivationEngine::Canonical);
DisjunctionSet cons(const Program& p, const Hypothesis& delta, DerivationEngine engine = DerivationEngine::Canonical);
std::optional<AttackWitness> attacks(const Program& p, const Hypothesis& delta, const Hypothesis& target,
                                     DerivationEngine engine = DerivationEngine::Canonical);
// The witness re-checks against a fresh computation.
bool witness_holds(const Program& p, const Hypothesis& delta, const Hypothesis& target, const AttackWitness& w,
                   DerivationEngine engine = DerivationEngine::Canonical);
bool self_consistent(const Program& p, const Hypothesis& delta);
bool admissible(const Program& p, const Hypothesis& delta, Atom a,
                DerivationEngine engine = DerivationEngine::Canonical,
                std::size_t bound = default_hypothesis_bound);

struct WfdhTrace {
    Hypothesis result;
    std::vector<AtomSet> chain; // D0 = {}, D1, ..., the last one stable
    bool bound_hit = false;     // no fixpoint within |base| + 1 rounds
};

WfdhTrace wfdh_trace(const Program& p, DerivationEngine engine = DerivationEngine::Canonical,
                     std::size_t bound = default_hypothesis_bound);
Hypothesis wfdh(const Program& p, DerivationEngine engine = DerivationEngine::Canonical,
                std::size_t bound = default_hypothesis_bound);
ModelState wfds(const Program& p, DerivationEngine engine = DerivationEngine::Canonical,
                std::size_t bound = default_hypothesis_bound);

} // namespace dwfs
