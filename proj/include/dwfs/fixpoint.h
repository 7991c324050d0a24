#pragma once

#include "dwfs/core.h"

#include <cstddef>

namespace dwfs {

inline constexpr std::size_t default_entailment_bound = 20;

// One application of the hyperresolution operator T_P^S to j.  A rule
// A' <- b1..bm yields A' | A1 | ... | Am for every choice of (bi | Ai) in j.
// Throws PreconditionError if p has a negative body literal.
DisjunctionSet tps_step(const Program& p, const DisjunctionSet& j);

// T_P^S up to its fixpoint, accumulating, without subsumption deletion.
DisjunctionSet tps_lfp(const Program& p);

// canonicalize(tps_lfp(p)).
DisjunctionSet least_model_state(const Program& p);

// Every classical model of p (rules read as implications) satisfies d.
// Exhaustive over base(p); CapacityError past `bound` atoms.
bool entails_classical(const Program& p, const AtomSet& d, std::size_t bound = default_entailment_bound);

} // namespace dwfs
