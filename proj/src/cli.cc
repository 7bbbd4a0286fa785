#include "hg4/cli.h"

#include <cstdio>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "hg4/classifier.h"
#include "hg4/verify.h"

namespace hg4 {

namespace {

struct Options {
    SolverPolicy policy;
    std::string format = "json";
    std::string out_path;
    std::string cache_path;
    std::vector<std::string> suites;
    std::string edges;
};

void add_policy_flags(CLI::App &cmd, Options &o) {
    cmd.add_option("--seed", o.policy.seed, "Seed for the randomized restarts")->capture_default_str();
    cmd.add_option("--restarts", o.policy.restarts, "Complex random restarts per state")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
    cmd.add_option("--tol", o.policy.tol, "Stop once a sweep gains less than this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd.add_option("--max-iter", o.policy.max_iter, "Sweep cap per restart")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()))
        ->capture_default_str();
}

void add_cache_flag(CLI::App &cmd, Options &o) {
    cmd.add_option("--cache", o.cache_path, "Orbit table file, reused when valid and rewritten otherwise");
}

OrbitTable orbit_table(const Options &o) {
    return o.cache_path.empty() ? enumerate_orbits() : load_or_build_orbits(o.cache_path);
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

int cmd_classify(const Options &o, std::ostream &out, std::ostream &err) {
    const ReportFormat format = parse_report_format(o.format);
    const Classification c = classify_all(orbit_table(o), o.policy);
    const std::string report = emit_report(c, format);
    if (o.out_path.empty()) {
        out << report;
    } else {
        write_report(o.out_path, report);
    }
    for (const std::string &f : c.match_failures) {
        err << "unmatched: " << f << "\n";
    }
    for (const auto &[i, j] : c.collisions) {
        err << "collision: " << c.hypergraph_classes[i].label << " and " << c.hypergraph_classes[j].label << "\n";
    }
    if (!c.fully_matched()) {
        err << "classification incomplete: " << c.match_failures.size() << " match failures, "
            << c.collisions.size() << " collisions\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int cmd_query(const Options &o, std::ostream &out) {
    const HypergraphCode h = parse_edges(o.edges);
    const StateVector s = build_state(h);
    const OrbitTable table = orbit_table(o);

    ClassRecord r;
    r.orbit = orbit_of(table, h);
    r.display = standardize(h);
    r.profile = entropy_profile(s);
    r.solution = geometric_entanglement(h, o.policy);
    r.signature = make_signature(r.solution.eg, r.profile);

    out << "edges: {" << format_edges(h) << "}\n";
    out << "code: " << h.bits << "\n";
    out << "standardized: {" << format_edges(r.display) << "}\n";
    out << "rank: " << rank(r.display) << "\n";
    out << "amplitudes (x 1/4):";
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        out << (mu % 8 == 0 ? "\n  " : " ") << basis_label(mu) << (s.amps[mu] > 0 ? " +1" : " -1");
    }
    out << "\n";
    out << "orbit: id " << r.orbit.orbit_id << ", size " << r.orbit.size << ", representative {"
        << format_edges(r.orbit.rep) << "}";
    if (r.orbit.m) {
        out << ", m " << *r.orbit.m;
    }
    out << "\n";
    if (r.orbit.rank >= 3) {
        const MatchResult m = match_to_reference(r);
        out << "class: " << (m.row ? "No." + std::to_string(*m.row) : std::string("unmatched")) << "\n";
    } else {
        out << "class: graph state\n";
    }
    out << "GE: " << fixed(r.solution.eg, 6) << " (overlap " << fixed(r.solution.overlap, 9) << ", pattern "
        << r.solution.pattern.label << ", " << r.solution.pattern.reality() << ", hits " << r.solution.restarts_hit
        << "/" << r.solution.runs << (r.solution.converged ? "" : ", not converged") << ")\n";
    out << "BE2 12|34 13|24 14|23:";
    for (double v : r.profile.be2) {
        out << " " << fixed(v, 6);
    }
    out << "\nBE1 1|234 2|134 3|124 4|123:";
    for (double v : r.profile.be1) {
        out << " " << fixed(v, 6);
    }
    out << "\nstabilizers: " << (verify_stabilizers(s, h) ? "ok" : "FAILED") << "\n";
    return kExitOk;
}

int cmd_verify(const Options &o, std::ostream &out) {
    std::vector<std::string> names = o.suites.empty() ? suite_names() : o.suites;
    std::optional<OrbitTable> table;
    bool all_passed = true;
    for (const std::string &name : names) {
        if (!table && (name == "closure" || name == "census")) {
            table = orbit_table(o);
        }
        const SuiteResult r = run_suite(name, table ? *table : OrbitTable{});
        out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? kExitOk : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Four-qubit hypergraph state classification", "hg4"};
    app.require_subcommand(1);
    Options o;

    CLI::App *classify = app.add_subcommand("classify", "Classify all 2^15 hypergraph states");
    add_policy_flags(*classify, o);
    add_cache_flag(*classify, o);
    classify->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
    classify->add_option("--out", o.out_path, "Write the report here instead of standard output");

    CLI::App *query = app.add_subcommand("query", "Describe one hypergraph given as edges, e.g. \"1234,123\"");
    query->add_option("edges", o.edges, "Comma-separated hyperedges")->required();
    add_policy_flags(*query, o);
    add_cache_flag(*query, o);

    CLI::App *verify = app.add_subcommand("verify", "Run the exhaustive structural suites");
    verify->add_option("--suite", o.suites, "Run only the named suite (repeatable)")
        ->check(CLI::IsMember(suite_names()));
    add_cache_flag(*verify, o);

    std::vector<const char *> argv{"hg4"};
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        o.policy.validate();
        if (classify->parsed()) {
            return cmd_classify(o, out, err);
        }
        if (query->parsed()) {
            return cmd_query(o, out);
        }
        return cmd_verify(o, out);
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace hg4
