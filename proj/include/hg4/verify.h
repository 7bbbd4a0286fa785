#ifndef HG4_VERIFY_H
#define HG4_VERIFY_H

#include <string>
#include <string_view>
#include <vector>

#include "hg4/orbits.h"

namespace hg4 {

struct SuiteResult {
    std::string name;
    bool passed = false;
    /// Number of individual checks performed.
    uint64_t checks = 0;
    std::string detail;
};

/// Names accepted by run_suite, in execution order.
const std::vector<std::string> &suite_names();

/// hypergraph -> signs -> hypergraph is the identity on every code, and the map is a bijection.
SuiteResult roundtrip_suite();
/// K_i|H> = |H> and [K_i, K_j] = 0 for every code.
SuiteResult stabilizer_suite();
/// The neighborhood product equals X_i on |H> for every code and vertex.
SuiteResult equivalence_suite();
/// apply_x / apply_z / permute agree with the state-level action up to global sign.
SuiteResult transforms_suite();
SuiteResult closure_suite(const OrbitTable &table);
/// Totals 16384 / 15360 / 1024 over 11 + 17 rank>=3 orbits.
SuiteResult census_suite(const OrbitTable &table);

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view name, const OrbitTable &table);

}  // namespace hg4

#endif
