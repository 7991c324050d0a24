#pragma once

#include "dwfs/core.h"

#include <cstddef>
#include <optional>
#include <vector>

namespace dwfs {

inline constexpr std::size_t default_unfounded_oracle_bound = 14;

struct UnfoundedOptions {
    // Largest base for which the exhaustive subset oracle may run.
    std::size_t oracle_bound = default_unfounded_oracle_bound;
    // Compare every greatest_unfounded result with the oracle (when in bound).
    bool cross_check = false;
};

// For every a in x and every rule r with a in head(r), one of:
//   body_status(s, r) == False;  pos(r) meets x;  s |= (head(r) - x) | neg(r).
// The last reading treats r as the clause head | neg over the atoms outside x.
bool is_unfounded(const Program& p, const ModelState& s, const AtomSet& x);

// Every unfounded subset of base(p), by increasing size.  CapacityError past the bound.
std::vector<AtomSet> enumerate_unfounded(const Program& p, const ModelState& s,
                                         std::size_t bound = default_unfounded_oracle_bound);

// Union of all unfounded sets if that union is itself unfounded.
std::optional<AtomSet> unfounded_union_oracle(const Program& p, const ModelState& s,
                                              std::size_t bound = default_unfounded_oracle_bound);

// The unfounded set containing every unfounded set, or nullopt if there is
// none.  Shrinks base(p) to a superset of every unfounded set, then checks it
// is unfounded; otherwise falls back to the oracle (Error if out of bound).
std::optional<AtomSet> greatest_unfounded(const Program& p, const ModelState& s, const UnfoundedOptions& opts = {});

// Heads of rules with a true body, minus false atoms (nonempty remainders), canonical.
DisjunctionSet t_operator(const Program& p, const ModelState& s);

// s extended by t_operator(p, s) and the greatest unfounded set.
// UndefinedOperatorError when no greatest unfounded set exists.
ModelState w_operator(const Program& p, const ModelState& s, const UnfoundedOptions& opts = {});

struct UwfsTrace {
    ModelState result;
    std::vector<ModelState> chain; // W0 = empty, W1, ..., last is the fixpoint
};

UwfsTrace uwfs_trace(const Program& p, const UnfoundedOptions& opts = {});
ModelState uwfs(const Program& p, const UnfoundedOptions& opts = {});

} // namespace dwfs
