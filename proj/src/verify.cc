#include "hg4/verify.h"

#include <stdexcept>

#include "hg4/statevec.h"

namespace hg4 {

namespace {

constexpr double kTolerance = 1e-10;

StateVector permuted_state(const StateVector &s, const Permutation &p) {
    StateVector out;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        unsigned image = 0;
        for (int v = 1; v <= kNumVertices; v++) {
            if ((mu >> (v - 1)) & 1) {
                image |= 1u << (p(v) - 1);
            }
        }
        out.amps[image] = s.amps[mu];
    }
    return out;
}

SuiteResult finish(std::string name, uint64_t checks, std::vector<std::string> failures) {
    SuiteResult r{std::move(name), failures.empty(), checks, {}};
    if (failures.empty()) {
        r.detail = std::to_string(checks) + " checks";
    } else {
        r.detail = std::to_string(failures.size()) + " failures, first: " + failures.front();
    }
    return r;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"roundtrip", "stabilizer", "equivalence",
                                                "transforms", "closure",    "census"};
    return names;
}

SuiteResult roundtrip_suite() {
    std::vector<std::string> failures;
    std::vector<bool> seen(kNumCodes, false);
    uint64_t checks = 0;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        const SignFunction g = signs_from_hypergraph(h);
        checks++;
        if (g[0]) {
            failures.push_back("code " + std::to_string(c) + " has g(0) = 1");
            continue;
        }
        if (hypergraph_from_signs(g) != h) {
            failures.push_back("code " + std::to_string(c) + " does not round-trip");
        }
        if (seen[g.bits >> 1]) {
            failures.push_back("sign function of code " + std::to_string(c) + " repeats");
        }
        seen[g.bits >> 1] = true;
    }
    return finish("roundtrip", checks, std::move(failures));
}

SuiteResult stabilizer_suite() {
    std::vector<std::string> failures;
    uint64_t checks = 0;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        checks++;
        if (!verify_stabilizers(HypergraphCode(c))) {
            failures.push_back("code " + std::to_string(c));
        }
    }
    return finish("stabilizer", checks, std::move(failures));
}

SuiteResult equivalence_suite() {
    std::vector<std::string> failures;
    uint64_t checks = 0;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        for (int v = 1; v <= kNumVertices; v++) {
            checks++;
            if (!neighborhood_equivalence_check(HypergraphCode(c), v)) {
                failures.push_back("code " + std::to_string(c) + " vertex " + std::to_string(v));
            }
        }
    }
    return finish("equivalence", checks, std::move(failures));
}

SuiteResult transforms_suite() {
    std::vector<std::string> failures;
    uint64_t checks = 0;
    auto expect = [&](const StateVector &got, const StateVector &want, const std::string &what) {
        checks++;
        if (got.distance_up_to_sign(want) >= kTolerance) {
            failures.push_back(what);
        }
    };
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        const StateVector s = build_state(h);
        for (int v = 1; v <= kNumVertices; v++) {
            const std::string where = " code " + std::to_string(c) + " vertex " + std::to_string(v);
            expect(build_state(apply_x(h, v)), Operator16::pauli_x(v) * s, "X" + where);
            expect(build_state(apply_z(h, v)), Operator16::pauli_z(v) * s, "Z" + where);
        }
        for (const Permutation &p : Permutation::all()) {
            expect(build_state(permute(h, p)), permuted_state(s, p), "permutation code " + std::to_string(c));
        }
    }
    return finish("transforms", checks, std::move(failures));
}

SuiteResult closure_suite(const OrbitTable &table) {
    std::vector<std::string> failures;
    if (table.class_id.size() != kNumCodes) {
        failures.push_back("table covers " + std::to_string(table.class_id.size()) + " codes");
    } else if (!closed_under_generators(table)) {
        failures.push_back("some generator leaves its orbit");
    }
    uint64_t total = 0;
    for (uint32_t size : table.sizes) {
        total += size;
        if (kGroupOrder % size != 0) {
            failures.push_back("orbit size " + std::to_string(size) + " does not divide the group order");
        }
    }
    if (total != kNumCodes) {
        failures.push_back("orbit sizes sum to " + std::to_string(total));
    }
    return finish("closure", static_cast<uint64_t>(kNumCodes) * (2 * kNumVertices + 24), std::move(failures));
}

SuiteResult census_suite(const OrbitTable &table) {
    std::vector<std::string> failures;
    RankCensus census;
    try {
        census = rank_census(table);
    } catch (const std::logic_error &e) {
        return finish("census", 1, {e.what()});
    }
    auto expect = [&](const char *what, uint32_t got, uint32_t want) {
        if (got != want) {
            failures.push_back(std::string(what) + " = " + std::to_string(got) + ", expected " + std::to_string(want));
        }
    };
    expect("rank-4 codes", census.rank4, 16384);
    expect("rank-3 codes", census.rank3, 15360);
    expect("graph codes", census.graphs, 1024);
    expect("rank-4 orbits", census.rank4_orbits, 11);
    expect("rank-3 orbits", census.rank3_orbits, 17);
    SuiteResult r = finish("census", 5, std::move(failures));
    if (r.passed) {
        r.detail = std::to_string(census.total()) + " codes: " + std::to_string(census.rank4) + " / " +
                   std::to_string(census.rank3) + " / " + std::to_string(census.graphs) + " in " +
                   std::to_string(census.rank4_orbits) + " + " + std::to_string(census.rank3_orbits) + " + " +
                   std::to_string(census.graph_orbits) + " orbits";
    }
    return r;
}

SuiteResult run_suite(std::string_view name, const OrbitTable &table) {
    if (name == "roundtrip") {
        return roundtrip_suite();
    }
    if (name == "stabilizer") {
        return stabilizer_suite();
    }
    if (name == "equivalence") {
        return equivalence_suite();
    }
    if (name == "transforms") {
        return transforms_suite();
    }
    if (name == "closure") {
        return closure_suite(table);
    }
    if (name == "census") {
        return census_suite(table);
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace hg4
