#pragma once

#include "dwfs/core.h"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dwfs {

enum class TransformKind { Unfolding, ElimTautology, ElimSImplication, PositiveReduction, NegativeReduction };

inline constexpr TransformKind all_transform_kinds[] = {
    TransformKind::Unfolding,         TransformKind::ElimTautology,     TransformKind::ElimSImplication,
    TransformKind::PositiveReduction, TransformKind::NegativeReduction,
};

std::string_view to_string(TransformKind k);

// Applying a step to its source program: (p \ removed) | added.
struct TransformStep {
    TransformKind kind;
    std::vector<Rule> removed;
    std::vector<Rule> added;

    friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

// r1 is made redundant by r2: r1 != r2 and for D = head(r2) \ head(r1),
// D is a subset of neg(r1), pos(r2) of pos(r1) and neg(r2) of neg(r1) \ D.
// (Moving D from the negative body of r1 into its head leaves a weakening of r2.)
bool is_s_implication(const Rule& r1, const Rule& r2);

// Every single application of `kind` to p, in rule order then atom order.
// Unfolding replaces one rule by its resolvents on one positive body atom.
std::vector<TransformStep> applicable(const Program& p, TransformKind kind);
// All kinds, in declaration order.
std::vector<TransformStep> applicable(const Program& p);

// Throws PreconditionError if the step is not applicable to p.  A step that
// removes and adds nothing is the identity.
Program apply(const Program& p, const TransformStep& step);

// Closure (canonical pos), every fact's head satisfied, every atom of the
// base that heads no rule is false.
bool bd_semantics_axioms(const ModelState& s, const Program& p);

// "kind: -[rules] / +[rules]" in program syntax.
std::string render_step(const Program& p, const TransformStep& step);

} // namespace dwfs
