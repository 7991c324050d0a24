#include "cli.h"

#include "dwfs/harness.h"
#include "dwfs/json_io.h"
#include "dwfs/parser.h"
#include "dwfs/residual.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

namespace dwfs::cli {

namespace {

struct Options {
    std::string input = "-";
    std::string format = "text";
    std::string method = "all";
    bool classic = false;
    std::size_t count = 100;
    std::size_t atoms = 5;
    std::size_t rules = 6;
    std::uint64_t seed = 0;
    std::size_t jobs = 0;
    bool all_reports = false;
    std::size_t hypothesis_bound = default_hypothesis_bound;
    std::size_t oracle_bound = default_unfounded_oracle_bound;
    std::size_t lft_capacity = default_lft_capacity;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    buf << f.rdbuf();
    return buf.str();
}

Bounds bounds_of(const Options& o) {
    Bounds b;
    b.hypothesis_bound = o.hypothesis_bound;
    b.lft_capacity = o.lft_capacity;
    b.unfounded.oracle_bound = o.oracle_bound;
    return b;
}

std::string render_negative(const Program& origin, const NegativeProgram& n) {
    return render_program(n.to_program(origin));
}

std::string render_witness(const Program& p, const PureDisjunction& d) {
    auto body = render_disjunction(p, d.atoms);
    if (d.polarity == Polarity::Positive) {
        return body;
    }
    std::string out;
    for (auto a : d.atoms) {
        out += (out.empty() ? "not " : " | not ") + p.name(a);
    }
    return out;
}

int cmd_check(const Options& o, const Program& p, std::ostream& out) {
    if (o.format == "json") {
        out << nlohmann::json{{"program", render_program(p)}, {"atoms", atoms_to_json(p, p.base())}}.dump() << '\n';
    }
    else {
        out << render_program(p);
    }
    return exit_ok;
}

int cmd_semantics(const Options& o, const Program& p, std::ostream& out) {
    if (o.method != "all") {
        auto s = compute(p, *semantics_from_string(o.method), bounds_of(o));
        if (o.format == "json") {
            out << state_to_json(p, s).dump() << '\n';
        }
        else {
            out << render_state(p, s);
        }
        return exit_ok;
    }
    auto report = check_equivalence(p, bounds_of(o));
    if (o.format == "json") {
        out << report_to_json(report).dump() << '\n';
    }
    else {
        for (const auto& [sem, st] : report.states) {
            out << "[" << to_string(sem) << "]\n" << render_state(p, st);
        }
        for (const auto& [sem, e] : report.errors) {
            out << "[" << to_string(sem) << "]\nerror: " << e << '\n';
        }
        if (report.first_divergence) {
            const auto& d = *report.first_divergence;
            out << "divergent: " << to_string(d.first) << " vs " << to_string(d.second) << " on "
                << render_witness(p, d.witness) << '\n';
        }
        else {
            out << "equal\n";
        }
    }
    if (report.first_divergence) {
        return exit_divergent;
    }
    return report.errors.empty() ? exit_ok : exit_capacity;
}

int cmd_residual(const Options& o, const Program& p, std::ostream& out) {
    auto n = o.classic ? classic_residual(p, o.lft_capacity) : strong_residual(p, o.lft_capacity);
    out << render_negative(p, n);
    return exit_ok;
}

int cmd_lft(const Options& o, const Program& p, std::ostream& out) {
    out << render_negative(p, lft(p, o.lft_capacity));
    return exit_ok;
}

int cmd_trace(const Options& o, const Program& p, std::ostream& out) {
    auto tr = strong_residual_trace(p, o.lft_capacity);
    for (std::size_t i = 0; i < tr.iterations.size(); ++i) {
        out << (i == 0 ? "% N0 = Lft(P)\n" : "% N" + std::to_string(i) + " = R*(N" + std::to_string(i - 1) + ")\n");
        out << render_negative(p, tr.iterations[i]);
    }
    auto d = derive_residual(p);
    out << "% derivation\n";
    for (const auto& s : d.steps) {
        out << render_step(p, s) << '\n';
    }
    const auto& last = d.programs.back();
    out << "% result\n" << render_program(last);
    if (d.step_cap_hit) {
        out << "% step cap reached before a normal form\n";
    }
    else if (last != tr.iterations.back().to_program(p)) {
        out << "% normal form differs from the strong residual program\n";
    }
    return exit_ok;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
    GeneratorConfig cfg;
    cfg.seed = o.seed;
    cfg.num_atoms = o.atoms;
    cfg.num_rules = o.rules;
    auto corpus = fuzz_corpus(cfg, o.count);
    const auto bounds = bounds_of(o);
    auto jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

    std::vector<EquivalenceReport> reports(corpus.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i; (i = next++) < corpus.size();) {
                reports[i] = check_equivalence(corpus[i], bounds);
            }
        }));
    }
    for (auto& w : workers) {
        w.get();
    }

    std::size_t divergent = 0;
    std::size_t capped = 0;
    for (const auto& r : reports) {
        divergent += !r.equal;
        capped += !r.errors.empty();
        if (o.all_reports || !r.equal || !r.errors.empty()) {
            out << report_to_json(r).dump() << '\n';
        }
    }
    if (o.format == "text") {
        out << "% " << reports.size() << " programs, " << divergent << " divergent, " << capped
            << " over capacity\n";
    }
    if (divergent) {
        return exit_divergent;
    }
    return capped ? exit_capacity : exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    Options o;
    if (const char* env = std::getenv("DWFS_ORACLE_BOUND")) {
        try {
            o.oracle_bound = o.hypothesis_bound = std::stoul(env);
        }
        catch (const std::exception&) {
            err << "error: DWFS_ORACLE_BOUND is not a number\n";
            return exit_usage;
        }
    }

    CLI::App app{"Well-founded semantics of disjunctive logic programs"};
    app.require_subcommand(1, 1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--hypothesis-bound", o.hypothesis_bound, "Largest base for attacker enumeration");
    app.add_option("--oracle-bound", o.oracle_bound, "Largest base for the unfounded-set oracle");
    app.add_option("--lft-capacity", o.lft_capacity, "Largest number of conditional facts in Lft");

    auto with_file = [&](CLI::App* sub) { sub->add_option("file", o.input, "Program file, '-' for stdin"); };
    auto* check = app.add_subcommand("check", "Parse and print the canonical program");
    with_file(check);
    auto* semantics = app.add_subcommand("semantics", "Compute model states");
    with_file(semantics);
    semantics->add_option("--method", o.method, "Semantics")
        ->check(CLI::IsMember({"wfds", "wfds-raw", "dwfs-star", "dwfs-classic", "uwfs", "all"}));
    auto* residual = app.add_subcommand("residual", "Print the strong residual program");
    with_file(residual);
    residual->add_flag("--classic", o.classic, "Use the classic reduction instead");
    auto* lftcmd = app.add_subcommand("lft", "Print the least fixpoint transformation");
    with_file(lftcmd);
    auto* trace = app.add_subcommand("trace", "Print the reduction sequence and a transformation derivation");
    with_file(trace);
    auto* fuzz = app.add_subcommand("fuzz", "Check the semantics against each other on random programs");
    fuzz->add_option("--count", o.count, "Number of programs");
    fuzz->add_option("--atoms", o.atoms, "Atoms per program")->check(CLI::Range(1, 26));
    fuzz->add_option("--rules", o.rules, "Maximum rules per program");
    fuzz->add_option("--seed", o.seed, "Generator seed");
    fuzz->add_option("--jobs", o.jobs, "Worker threads (0 = hardware)");
    fuzz->add_flag("--all-reports", o.all_reports, "Print every report, not only failures");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        auto code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*fuzz) {
            return cmd_fuzz(o, out);
        }
        const auto text = read_input(o.input, in);
        Program p;
        try {
            p = parse_program(text);
        }
        catch (const ParseError& e) {
            err << (o.input == "-" ? "<stdin>" : o.input) << ":" << e.what() << '\n';
            return exit_usage;
        }
        if (*check) {
            return cmd_check(o, p, out);
        }
        if (*semantics) {
            return cmd_semantics(o, p, out);
        }
        if (*residual) {
            return cmd_residual(o, p, out);
        }
        if (*lftcmd) {
            return cmd_lft(o, p, out);
        }
        return cmd_trace(o, p, out);
    }
    catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return exit_capacity;
    }
    catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace dwfs::cli
