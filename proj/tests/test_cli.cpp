#include "cli.h"

#include <json.hpp>

#include <doctest.h>

#include <sstream>

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = dwfs::cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

const std::string travel = "b | l :- not p.\nl | p.\n";

} // namespace

TEST_CASE("semantics on the travel program") {
    auto r = run({"semantics", "-", "--method", "dwfs-star"}, travel);
    CHECK(r.code == 0);
    CHECK(r.out == "l | p\nnot b\n");
    auto c = run({"semantics", "-", "--method", "dwfs-classic"}, travel);
    CHECK(c.code == 0);
    CHECK(c.out == "l | p\n");
}

TEST_CASE("semantics defaults to the equivalence report") {
    auto r = run({"semantics", "-"}, travel);
    CHECK(r.code == 0);
    CHECK(r.out.find("[uwfs]\nl | p\nnot b\n") != std::string::npos);
    CHECK(r.out.substr(r.out.size() - 6) == "equal\n");
    auto d = run({"semantics", "-"}, "a | c. b :- a, c.");
    CHECK(d.code == 2);
    CHECK(d.out.find("divergent:") != std::string::npos);
}

TEST_CASE("json output matches the text output") {
    auto j = run({"--format", "json", "semantics", "-", "--method", "wfds"}, travel);
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["true_disjunctions"] == nlohmann::json::array({nlohmann::json::array({"l", "p"})}));
    CHECK(doc["false_atoms"] == nlohmann::json{"b"});
    CHECK(doc["undefined_atoms"] == nlohmann::json{"l", "p"});
}

TEST_CASE("check echoes the canonical program") {
    auto r = run({"check", "-"}, "a|b :- c , c.\n% comment\n");
    CHECK(r.code == 0);
    CHECK(r.out == "a | b :- c.\n");
}

TEST_CASE("parse errors exit with 1 and a position") {
    auto r = run({"check", "-"}, "a :- .");
    CHECK(r.code == 1);
    CHECK(r.err == "<stdin>:1:6: expected body literal, found '.'\n");
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 1);
    CHECK(run({"semantics", "-", "--method", "nope"}, travel).code == 1);
    CHECK(run({"check", "/nonexistent/file.lp"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("residual, lft and trace") {
    CHECK(run({"residual", "-"}, travel).out == "l | p.\n");
    CHECK(run({"residual", "-", "--classic"}, travel).out == "b | l :- not p.\nl | p.\n");
    auto lft = run({"lft", "-"}, "b | l :- u, not p. l :- v. p | v :- u, not w. u.");
    CHECK(lft.out == "b | l :- not p.\nl | p :- not w.\np | v :- not w.\nu.\n");
    auto tr = run({"trace", "-"}, travel);
    CHECK(tr.code == 0);
    CHECK(tr.out.find("s-implication: -[b | l :- not p.] / +[]") != std::string::npos);
}

TEST_CASE("capacity errors exit with 3") {
    auto r = run({"--hypothesis-bound", "1", "semantics", "-", "--method", "wfds"}, travel);
    CHECK(r.code == 3);
    auto l = run({"--lft-capacity", "1", "lft", "-"}, travel);
    CHECK(l.code == 3);
}

TEST_CASE("fuzz is deterministic") {
    auto a = run({"fuzz", "--count", "30", "--atoms", "4", "--rules", "4", "--seed", "3", "--all-reports"});
    auto b = run({"fuzz", "--count", "30", "--atoms", "4", "--rules", "4", "--seed", "3", "--all-reports", "--jobs", "1"});
    CHECK(a.out == b.out);
    CHECK((a.code == 0 || a.code == 2));
    std::istringstream lines(a.out);
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line);) {
        if (line.rfind("{", 0) == 0) {
            auto j = nlohmann::json::parse(line);
            CHECK(j.contains("equal"));
            ++n;
        }
    }
    CHECK(n == 30);
}
