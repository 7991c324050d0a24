#pragma once

#include "dwfs/core.h"
#include "dwfs/transforms.h"

#include <compare>
#include <cstddef>
#include <vector>

namespace dwfs {

inline constexpr std::size_t default_lft_capacity = 1'000'000;

// head <- not c1, ..., not ct
struct ConditionalFact {
    AtomSet head;
    AtomSet neg;

    Rule rule() const { return {head, {}, neg}; }
    friend bool operator==(const ConditionalFact&, const ConditionalFact&) = default;
    friend auto operator<=>(const ConditionalFact&, const ConditionalFact&) = default;
};

// Sorted, duplicate-free set of conditional facts.
class NegativeProgram {
public:
    NegativeProgram() = default;
    explicit NegativeProgram(std::vector<ConditionalFact> facts);
    // Requires every rule of p to have an empty positive body.
    static NegativeProgram from_program(const Program& p);

    const std::vector<ConditionalFact>& facts() const noexcept { return facts_; }
    std::size_t size() const noexcept { return facts_.size(); }
    bool empty() const noexcept { return facts_.empty(); }
    AtomSet heads() const;
    std::size_t literal_count() const;

    // As a program over the symbols and base of `origin`.
    Program to_program(const Program& origin) const;

    friend bool operator==(const NegativeProgram&, const NegativeProgram&) = default;

private:
    std::vector<ConditionalFact> facts_;
};

// T_P^G(j): for a rule A' <- b1..bm, not C and premises Ci in j with bi in
// head(Ci), the fact A' | (head(C1) - b1) | ... <- not (C | neg(C1) | ...).
NegativeProgram tpg_step(const Program& p, const NegativeProgram& j);

// T_P^G up to its fixpoint, accumulating.  CapacityError beyond `capacity` facts.
NegativeProgram lft(const Program& p, std::size_t capacity = default_lft_capacity);

// R*: drop facts that are s-implications of another fact, then drop every
// "not c" whose c heads no fact of the input.
NegativeProgram strong_reduction(const NegativeProgram& n);

struct ResidualTrace {
    std::vector<NegativeProgram> iterations; // N0 = lft(p), N1 = R*(N0), ..., last is the fixpoint
};

NegativeProgram strong_residual(const Program& p, std::size_t capacity = default_lft_capacity);
ResidualTrace strong_residual_trace(const Program& p, std::size_t capacity = default_lft_capacity);

// Heads of unconditional facts of res*(p) are true; atoms of base(p) heading
// nothing in res*(p) are false.
ModelState dwfs_star(const Program& p, std::size_t capacity = default_lft_capacity);

// Baseline: elimination of non-minimal facts (plain implication), negative
// reduction, positive reduction.
NegativeProgram classic_reduction(const NegativeProgram& n);
NegativeProgram classic_residual(const Program& p, std::size_t capacity = default_lft_capacity);
ModelState dwfs_classic(const Program& p, std::size_t capacity = default_lft_capacity);

// A concrete sequence of elementary transformations from p towards res*(p).
struct Derivation {
    std::vector<TransformStep> steps;
    std::vector<Program> programs; // programs[0] = p, programs[i+1] = apply(programs[i], steps[i])
    bool step_cap_hit = false;
};

// Greedy schedule: tautology, positive reduction, negative reduction,
// s-implication, then unfolding of the first rule with a positive body.
Derivation derive_residual(const Program& p, std::size_t step_cap = 10'000);

} // namespace dwfs
