#include "support.h"

#include "dwfs/argumentation.h"
#include "dwfs/error.h"
#include "dwfs/harness.h"
#include "dwfs/transforms.h"

#include <doctest.h>

using namespace dwfs;
using namespace dwfs::test;

namespace {

std::optional<TransformStep> find_step(const Program& p, TransformKind k, const Rule& removed) {
    for (auto& s : applicable(p, k)) {
        if (s.removed.size() == 1 && s.removed[0] == removed) {
            return s;
        }
    }
    return std::nullopt;
}

std::optional<TransformStep> find_unfolding(const Program& p, const Rule& r, Atom b) {
    for (auto& s : applicable(p, TransformKind::Unfolding)) {
        // The unfolded atom is the one missing from every resolvent.
        if (s.removed[0] == r
            && std::all_of(s.added.begin(), s.added.end(), [&](const Rule& x) { return !x.pos.contains(b); })) {
            return s;
        }
    }
    return std::nullopt;
}

std::size_t literal_count(const Program& p) {
    std::size_t n = 0;
    for (const auto& r : p.rules()) {
        n += r.head.size() + r.pos.size() + r.neg.size();
    }
    return n;
}

} // namespace

TEST_CASE("s-implication") {
    auto p = parse("b | l :- not p. l | p. l :- not p.");
    auto r1 = rule(p, "b | l :- not p.");
    auto r2 = rule(p, "l | p.");
    auto r3 = rule(p, "l :- not p.");
    CHECK(is_s_implication(r1, r2));
    CHECK(is_s_implication(r1, r3));
    CHECK_FALSE(is_s_implication(r1, r1));
    CHECK_FALSE(is_s_implication(r2, r1));
}

TEST_CASE("s-implication agrees with the existential moved-set reading") {
    auto p = parse("a | b | c :- a, b, not c, not d.");
    auto subsets = subsets_by_size(p.base());
    std::size_t checked = 0;
    for (const auto& h1 : subsets) {
        if (h1.empty() || h1.size() > 2) {
            continue;
        }
        for (const auto& n1 : subsets) {
            for (const auto& h2 : subsets) {
                if (h2.empty() || h2.size() > 2) {
                    continue;
                }
                for (const auto& n2 : subsets) {
                    Rule r1{h1, {}, n1};
                    Rule r2{h2, {}, n2};
                    bool exists = false;
                    for (const auto& c : subsets) {
                        if (c.subset_of(n1) && h2.subset_of(h1 | c) && n2.subset_of(n1 - c)) {
                            exists = true;
                        }
                    }
                    CHECK(is_s_implication(r1, r2) == (r1 != r2 && exists));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("chain program reduces to three facts") {
    auto p = parse(chain);
    auto r5 = rule(p, "w | q :- w, not p.");
    auto s = find_step(p, TransformKind::ElimTautology, r5);
    REQUIRE(s);
    p = apply(p, *s);

    auto q = at(p, "q");
    for (auto text : {"p1 | p2 :- q.", "p3 :- p, q, not p4."}) {
        auto u = find_unfolding(p, rule(p, text), q);
        REQUIRE(u);
        p = apply(p, *u);
    }
    CHECK(p.rules() == rules(p, "p | p1 | p2. p1 | p2. p3 :- p, not p4. p3 | p4. q."));

    for (auto text : {"p | p1 | p2.", "p3 :- p, not p4."}) {
        auto e = find_step(p, TransformKind::ElimSImplication, rule(p, text));
        REQUIRE(e);
        p = apply(p, *e);
    }
    CHECK(p.rules() == rules(p, "p1 | p2. p3 | p4. q."));
    CHECK(applicable(p, TransformKind::PositiveReduction).empty());
}

TEST_CASE("unfolding resolves against every defining rule") {
    auto p = parse(chain);
    auto u = find_unfolding(p, rule(p, "p1 | p2 :- q."), at(p, "q"));
    REQUIRE(u);
    CHECK(u->added == rules(p, "p1 | p2. p1 | p2 | w :- w, not p."));
}

TEST_CASE("travel program loses its weaker rule") {
    auto p = parse(travel);
    auto steps = applicable(p, TransformKind::ElimSImplication);
    REQUIRE(steps.size() == 1);
    CHECK(apply(p, steps[0]).rules() == rules(p, "l | p."));
}

TEST_CASE("apply") {
    auto p = parse(travel);
    CHECK(apply(p, TransformStep{TransformKind::Unfolding, {}, {}}) == p);
    TransformStep stale{TransformKind::ElimTautology, {rule(p, "l | p.")}, {}};
    CHECK_THROWS_AS(apply(p, stale), PreconditionError);
}

TEST_CASE("positive and negative reduction") {
    auto p = parse("a :- not b, not c. c. d :- not a.");
    auto pr = applicable(p, TransformKind::PositiveReduction);
    REQUIRE(pr.size() == 1);
    CHECK(pr[0].added == rules(p, "a :- not c."));
    auto nr = applicable(p, TransformKind::NegativeReduction);
    REQUIRE(nr.size() == 1);
    CHECK(nr[0].removed == rules(p, "a :- not b, not c."));
}

TEST_CASE("render_step") {
    auto p = parse(travel);
    auto s = applicable(p, TransformKind::ElimSImplication).at(0);
    CHECK(render_step(p, s) == "s-implication: -[b | l :- not p.] / +[]");
}

TEST_CASE("bd_semantics_axioms") {
    auto p = parse(blocked_c);
    CHECK(bd_semantics_axioms(wfds(p), p));
    auto f = parse("a.");
    CHECK_FALSE(bd_semantics_axioms(ModelState{}, f));
    auto x = parse("a :- x.");
    CHECK_FALSE(bd_semantics_axioms(state(x, {}), x));
    CHECK(bd_semantics_axioms(state(x, {}, "x"), x));
}

TEST_CASE("negative reduction is subsumed by s-implication") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        GeneratorConfig cfg{seed, 5, 8, 2, 2, 3, 3, 0.6};
        auto p = random_program(cfg);
        for (const auto& s : applicable(p, TransformKind::NegativeReduction)) {
            const auto& r = s.removed[0];
            bool implied = std::any_of(p.rules().begin(), p.rules().end(), [&](const Rule& f) {
                return f.is_fact() && f.head.subset_of(r.neg) && is_s_implication(r, f);
            });
            CHECK(implied);
        }
    }
}

TEST_CASE("every step but unfolding shrinks the program") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg{seed, 5, 8, 3, 2, 2, 3, 0.5};
        auto p = random_program(cfg);
        for (auto k : all_transform_kinds) {
            if (k == TransformKind::Unfolding) {
                continue;
            }
            for (const auto& s : applicable(p, k)) {
                auto q = apply(p, s);
                bool fewer_rules = q.rules().size() < p.rules().size();
                bool same_rules_fewer_literals =
                    q.rules().size() == p.rules().size() && literal_count(q) < literal_count(p);
                CHECK((fewer_rules || same_rules_fewer_literals));
            }
        }
    }
}
