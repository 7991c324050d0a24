#include "support.h"

#include "dwfs/argumentation.h"
#include "dwfs/error.h"
#include "dwfs/harness.h"
#include "dwfs/residual.h"

#include <doctest.h>

#include <set>

using namespace dwfs;
using namespace dwfs::test;

namespace {

NegativeProgram facts(const Program& p, std::string_view text) {
    std::vector<ConditionalFact> out;
    for (const auto& r : rules(p, text)) {
        out.push_back({r.head, r.neg});
    }
    return NegativeProgram(std::move(out));
}

// Saturation by repeatedly resolving one body atom at a time, on bitmasks.
std::set<std::pair<std::uint32_t, std::uint32_t>> naive_lft(const Program& p) {
    auto mask = [](const AtomSet& s) {
        std::uint32_t m = 0;
        for (auto a : s) {
            m |= 1u << index(a);
        }
        return m;
    };
    struct Partial {
        std::uint32_t head, pos, neg;
        auto operator<=>(const Partial&) const = default;
    };
    std::set<Partial> partials;
    for (const auto& r : p.rules()) {
        partials.insert({mask(r.head), mask(r.pos), mask(r.neg)});
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> done;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& x : std::set<Partial>(partials)) {
            if (x.pos == 0) {
                changed |= done.insert({x.head, x.neg}).second;
                continue;
            }
            const auto b = static_cast<std::uint32_t>(__builtin_ctz(x.pos));
            for (const auto& [h, n] : std::set(done)) {
                if (h >> b & 1u) {
                    Partial y{x.head | (h & ~(1u << b)), x.pos & ~(1u << b), x.neg | n};
                    changed |= partials.insert(y).second;
                }
            }
        }
    }
    return done;
}

bool included(const ModelState& s, const ModelState& t) { return state_included(s, t); }

} // namespace

TEST_CASE("tpg_step resolves through conditional facts") {
    auto p = parse(lft_source);
    auto j = facts(p, "u. p | v :- not w.");
    auto next = tpg_step(p, j);
    CHECK(std::count(next.facts().begin(), next.facts().end(), ConditionalFact{set(p, "l p"), set(p, "w")}) == 1);
    auto q = parse("a :- b.");
    CHECK(tpg_step(q, {}).empty());
    auto r = parse("a :- not b. c.");
    CHECK(tpg_step(r, {}).size() == 2);
}

TEST_CASE("lft of the source program") {
    auto p = parse(lft_source);
    auto target = parse(lft_target);
    CHECK(lft(p).to_program(p) == target);
    CHECK(lft(target).to_program(target) == target);
}

TEST_CASE("lft of the chain program") {
    auto p = parse(chain);
    auto n = lft(p);
    CHECK(std::count(n.facts().begin(), n.facts().end(), ConditionalFact{set(p, "p1 p2"), {}}) == 1);
    CHECK(std::none_of(n.facts().begin(), n.facts().end(),
                       [&](const ConditionalFact& f) { return f.head == set(p, "p3"); }));
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& f : n.facts()) {
        std::uint32_t h = 0, g = 0;
        for (auto a : f.head) h |= 1u << index(a);
        for (auto a : f.neg) g |= 1u << index(a);
        got.insert({h, g});
    }
    CHECK(got == naive_lft(p));
}

TEST_CASE("lft capacity") {
    auto p = parse(chain);
    CHECK_THROWS_AS(lft(p, 2), CapacityError);
}

TEST_CASE("strong_reduction") {
    auto p = parse(travel);
    CHECK(strong_reduction(facts(p, travel)) == facts(p, "l | p."));
    auto q = parse("a :- not b. b :- c.");
    CHECK(strong_reduction(facts(q, "a :- not b.")) == facts(q, "a."));
    CHECK(strong_reduction({}).empty());
}

TEST_CASE("strong_residual") {
    auto c = parse(chain);
    CHECK(strong_residual(c).to_program(c).rules() == rules(c, "p1 | p2. p3 | p4. q."));
    auto t = parse(travel);
    CHECK(strong_residual(t) == facts(t, "l | p."));
    auto f = parse("a | b.");
    CHECK(strong_residual(f) == facts(f, "a | b."));
}

TEST_CASE("dwfs_star") {
    auto t = parse(travel);
    CHECK(dwfs_star(t) == state(t, {"l|p"}, "b"));
    auto c = parse(chain);
    auto s = dwfs_star(c);
    for (auto d : {"p1|p2", "p3|p4", "q"}) {
        CHECK(state_satisfies_positive(s, set(c, d)));
    }
    CHECK(s.false_atoms().contains(at(c, "w")));
    CHECK(s.false_atoms().contains(at(c, "p")));
    auto u = parse(unfounded_demo);
    CHECK(dwfs_star(u) == state(u, {"a|b"}, "c"));
}

TEST_CASE("classic_reduction") {
    auto t = parse(travel);
    CHECK(classic_reduction(facts(t, travel)) == facts(t, travel));
    auto q = parse("a :- not b. b :- c.");
    CHECK(classic_reduction(facts(q, "a :- not b.")) == facts(q, "a."));
    auto r = parse("a. a | b.");
    CHECK(classic_reduction(facts(r, "a. a | b.")) == facts(r, "a."));
}

TEST_CASE("dwfs_classic") {
    auto t = parse(travel);
    CHECK(dwfs_classic(t) == state(t, {"l|p"}));
    auto f = parse("a | b.");
    CHECK(dwfs_classic(f) == state(f, {"a|b"}));
    auto p = parse(blocked_c);
    CHECK(dwfs_classic(p) == state(p, {"a|b", "d"}, "c"));
}

TEST_CASE("greedy derivation reaches the strong residual program") {
    for (auto text : {travel, chain, lft_source, blocked_c, unfounded_demo}) {
        auto p = parse(text);
        auto d = derive_residual(p);
        CHECK_FALSE(d.step_cap_hit);
        CHECK(d.programs.back() == strong_residual(p).to_program(p));
        for (std::size_t i = 0; i < d.steps.size(); ++i) {
            CHECK(apply(d.programs[i], d.steps[i]) == d.programs[i + 1]);
        }
    }
}

TEST_CASE("residual properties on random programs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg{seed, 5, 7, 3, 2, 2, 3, 0.4};
        auto p = random_program(cfg);
        auto n = lft(p);

        // R* never grows its operand and settles within the literal count.
        auto tr = strong_residual_trace(p);
        CHECK(tr.iterations.size() <= n.literal_count() + 2);
        for (std::size_t i = 1; i < tr.iterations.size(); ++i) {
            CHECK(tr.iterations[i].size() <= tr.iterations[i - 1].size());
            CHECK(tr.iterations[i].literal_count() <= tr.iterations[i - 1].literal_count());
        }

        auto star = dwfs_star(p);
        CHECK(bd_semantics_axioms(star, p));
        CHECK(state_consistent(star));
        CHECK(dwfs_star(n.to_program(p)) == star);
        CHECK(included(dwfs_classic(p), star));
    }
}
