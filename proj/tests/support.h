#pragma once

#include "dwfs/core.h"
#include "dwfs/parser.h"

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace dwfs::test {

inline Program parse(std::string_view text) { return parse_program(text); }

inline Atom at(const Program& p, std::string_view name) {
    auto a = p.symbols()->find(name);
    if (!a) {
        throw std::runtime_error("no atom " + std::string(name));
    }
    return *a;
}

// "a b c" or "a|b|c" -> atom set over p.
inline AtomSet set(const Program& p, std::string_view names) {
    std::string s(names);
    for (auto& c : s) {
        if (c == '|' || c == ',') {
            c = ' ';
        }
    }
    std::istringstream in(s);
    AtomSet out;
    for (std::string n; in >> n;) {
        out.insert(at(p, n));
    }
    return out;
}

inline DisjunctionSet disjs(const Program& p, std::vector<std::string_view> ds) {
    DisjunctionSet out;
    for (auto d : ds) {
        out.push_back(set(p, d));
    }
    return normalize(std::move(out));
}

inline ModelState state(const Program& p, std::vector<std::string_view> pos, std::string_view false_atoms = "") {
    return ModelState(disjs(p, std::move(pos)), set(p, false_atoms));
}

// A rule written in program syntax, over p's atoms.
inline Rule rule(const Program& p, std::string_view text) {
    auto q = parse_program(text);
    const auto& r = q.rules().at(0);
    auto tr = [&](const AtomSet& s) {
        AtomSet out;
        for (auto a : s) {
            out.insert(at(p, q.name(a)));
        }
        return out;
    };
    return {tr(r.head), tr(r.pos), tr(r.neg)};
}

inline std::vector<Rule> rules(const Program& p, std::string_view text) {
    auto q = parse_program(text);
    std::vector<Rule> out;
    for (const auto& r : q.rules()) {
        out.push_back(rule(p, render_rule(q, r)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Programs shared by several suites.
inline constexpr std::string_view reduct_demo = "a :- b, not c. b | c :- not e. b | c | d.";
inline constexpr std::string_view cancel_demo = "a | b :- c, not d. c | e :- g, not f. a | d :- not b. g.";
inline constexpr std::string_view blocked_c = "a | b. c :- d, not a, not b. d. e :- not e.";
inline constexpr std::string_view travel = "b | l :- not p. l | p.";
inline constexpr std::string_view chain =
    "p | p1 | p2. p1 | p2 :- q. p3 :- p, q, not p4. p3 | p4. w | q :- w, not p. q.";
inline constexpr std::string_view lft_source = "b | l :- u, not p. l :- v. p | v :- u, not w. u.";
inline constexpr std::string_view lft_target = "b | l :- not p. l | p :- not w. p | v :- not w. u.";
inline constexpr std::string_view unfounded_demo = "a | b. c :- not a, not b.";

} // namespace dwfs::test
