#include "support.h"

#include "dwfs/harness.h"
#include "dwfs/json_io.h"

#include <doctest.h>

using namespace dwfs;
using namespace dwfs::test;

TEST_CASE("repeated body literals merge") {
    auto p = parse("a | b :- c, c.");
    REQUIRE(p.rules().size() == 1);
    CHECK(p.rules()[0] == rule(p, "a | b :- c."));
    CHECK(parse("a | a | b :- not c, not c.").rules()[0].head.size() == 2);
    CHECK(parse("a. a.").rules().size() == 1);
}

TEST_CASE("travel program parses to two rules") {
    auto p = parse("b | l :- not p.  l | p.");
    CHECK(p.rules() == rules(p, "l | p. b | l :- not p."));
    CHECK(p.base() == set(p, "b l p"));
}

TEST_CASE("comments and whitespace") {
    auto p = parse("% header\n a|b:-c ,not  d.% tail\n\n c.");
    CHECK(p.rules().size() == 2);
    CHECK(p.name(atom(0)) == "a");
}

TEST_CASE("syntax errors carry positions") {
    auto fails_at = [](std::string_view text, int line, int col) {
        try {
            parse_program(text);
        }
        catch (const ParseError& e) {
            CHECK(e.span().line == line);
            CHECK(e.span().column == col);
            return true;
        }
        return false;
    };
    CHECK(fails_at("a :- .", 1, 6));
    CHECK(fails_at("a.\n:- b.", 2, 1));
    CHECK(fails_at("not a :- b.", 1, 1));
    CHECK(fails_at("a | not b.", 1, 5));
    CHECK(fails_at("a :- b", 1, 7));
    CHECK(fails_at("a :- b; c.", 1, 7));
    CHECK(fails_at("a :- not.", 1, 9));
    CHECK(fails_at("1a.", 1, 1));
}

TEST_CASE("render_program") {
    CHECK(render_program(parse("a | b :- c, not d.")) == "a | b :- c, not d.\n");
    CHECK(render_program(parse("")) == "");
    auto p = parse(cancel_demo);
    CHECK(parse(render_program(p)) == p);
    CHECK(render_program(parse(render_program(p))) == render_program(p));
}

TEST_CASE("render_state") {
    auto p = parse(blocked_c);
    CHECK(render_state(p, state(p, {"a|b", "d"}, "c")) == "a | b\nd\nnot c\n");
    CHECK(render_state(p, ModelState{}) == "");
    auto t = parse(travel);
    CHECK(render_state(t, state(t, {"l|p"}, "b")) == "l | p\nnot b\n");
}

TEST_CASE("state json schema") {
    auto p = parse(blocked_c);
    auto s = state(p, {"a|b", "d"}, "c");
    auto j = state_to_json(p, s);
    CHECK(j.dump() == R"({"false_atoms":["c"],"true_disjunctions":[["a","b"],["d"]],"undefined_atoms":["a","b","e"]})");
    CHECK(state_from_json(p, j) == s);
}

TEST_CASE("parse and render round-trip on random programs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        GeneratorConfig cfg;
        cfg.seed = seed;
        cfg.num_atoms = 6;
        cfg.num_rules = 8;
        auto p = random_program(cfg);
        auto text = render_program(p);
        auto q = parse(text);
        CHECK(q == p);
        CHECK(render_program(q) == text);
    }
}
