#include "hg4/geoment.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace hg4 {

namespace {

constexpr double kBestOverlapWindow = 1e-9;
constexpr double kMonotoneSlack = 1e-14;
constexpr double kMergeThreshold = 1 - 1e-6;
constexpr double kRealityThreshold = 1e-6;
constexpr double kPoleDistance = 1e-8;
constexpr int kZMaxSteps = 10000;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

cdouble amplitude(const QubitState &q, unsigned bit) {
    return bit ? q.y : q.x;
}

QubitState random_qubit(std::mt19937_64 &rng, bool real) {
    std::normal_distribution<double> normal;
    while (true) {
        QubitState q;
        if (real) {
            q.x = normal(rng);
            q.y = normal(rng);
        } else {
            const double a = normal(rng);
            const double b = normal(rng);
            const double c = normal(rng);
            const double d = normal(rng);
            q.x = {a, b};
            q.y = {c, d};
        }
        const double n = std::sqrt(std::norm(q.x) + std::norm(q.y));
        if (n > 1e-12) {
            q.x /= n;
            q.y /= n;
            return q;
        }
    }
}

struct RunResult {
    double overlap;
    ProductState phi;
    bool converged;
};

RunResult run_ascent(const StateVector &s, ProductState phi, const SolverPolicy &policy) {
    double prev = std::abs(phi.overlap_with(s));
    for (int sweep = 0; sweep < policy.max_iter; sweep++) {
        const double f = ascent_sweep(s, phi);
        if (f < prev - kMonotoneSlack) {
            throw std::logic_error("overlap decreased during an ascent sweep");
        }
        if (f - prev < policy.tol) {
            return {f, phi, true};
        }
        prev = f;
    }
    return {prev, phi, false};
}

std::string label_for_blocks(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end());
    if (sizes == std::vector<int>{4}) {
        return "4";
    }
    if (sizes == std::vector<int>{1, 3}) {
        return "1,3";
    }
    if (sizes == std::vector<int>{2, 2}) {
        return "2,2";
    }
    if (sizes == std::vector<int>{1, 1, 2}) {
        return "1,2,1";
    }
    return "1,1,1,1";
}

bool pattern_preferred(const DegeneracyPattern &a, const DegeneracyPattern &b) {
    if (a.blocks != b.blocks) {
        return a.blocks < b.blocks;
    }
    return a.real && !b.real;
}

}  // namespace

double QubitState::fidelity_amplitude(const QubitState &other) const {
    return std::abs(std::conj(x) * other.x + std::conj(y) * other.y);
}

cdouble ProductState::overlap_with(const StateVector &s) const {
    cdouble total = 0;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        cdouble term = s.amps[mu];
        for (int v = 0; v < kNumVertices; v++) {
            term *= amplitude(qubits[v], (mu >> v) & 1);
        }
        total += term;
    }
    return total;
}

void SolverPolicy::validate() const {
    if (restarts < 1) {
        throw std::invalid_argument("restarts must be at least 1");
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("tol must be positive");
    }
    if (max_iter < 1) {
        throw std::invalid_argument("max_iter must be at least 1");
    }
}

double ascent_sweep(const StateVector &s, ProductState &phi) {
    double f = 0;
    for (int i = 0; i < kNumVertices; i++) {
        std::array<cdouble, 2> env{};
        for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
            cdouble term = s.amps[mu];
            for (int v = 0; v < kNumVertices; v++) {
                if (v != i) {
                    term *= amplitude(phi.qubits[v], (mu >> v) & 1);
                }
            }
            env[(mu >> i) & 1] += term;
        }
        const double n = std::sqrt(std::norm(env[0]) + std::norm(env[1]));
        if (n > 0) {
            phi.qubits[i].x = std::conj(env[0]) / n;
            phi.qubits[i].y = std::conj(env[1]) / n;
        }
        f = n;
    }
    return f;
}

GeSolution closest_product(const StateVector &s, const SolverPolicy &policy) {
    policy.validate();
    const int total_runs = policy.restarts + policy.probe_count();

    std::vector<RunResult> runs;
    runs.reserve(total_runs);
    for (int k = 0; k < total_runs; k++) {
        std::mt19937_64 rng(splitmix64(policy.seed ^ splitmix64(static_cast<uint64_t>(k))));
        const bool real = k >= policy.restarts;
        ProductState phi;
        for (auto &q : phi.qubits) {
            q = random_qubit(rng, real);
        }
        runs.push_back(run_ascent(s, phi, policy));
    }

    GeSolution sol;
    sol.runs = total_runs;
    for (const RunResult &r : runs) {
        sol.overlap = std::max(sol.overlap, r.overlap);
        sol.converged = sol.converged && r.converged;
    }

    bool have_choice = false;
    bool any_real = false;
    for (const RunResult &r : runs) {
        if (sol.overlap - r.overlap > kBestOverlapWindow) {
            continue;
        }
        sol.restarts_hit++;
        const DegeneracyPattern p = degeneracy_pattern(r.phi);
        any_real = any_real || p.real;
        if (!have_choice || pattern_preferred(p, sol.pattern)) {
            sol.pattern = p;
            sol.witness = r.phi;
            have_choice = true;
        }
        if (std::find(sol.competing_patterns.begin(), sol.competing_patterns.end(), p) ==
            sol.competing_patterns.end()) {
            sol.competing_patterns.push_back(p);
        }
    }
    sol.pattern.real = any_real;
    std::sort(sol.competing_patterns.begin(), sol.competing_patterns.end(),
              [](const DegeneracyPattern &a, const DegeneracyPattern &b) {
                  if (pattern_preferred(a, b) != pattern_preferred(b, a)) {
                      return pattern_preferred(a, b);
                  }
                  return a.label < b.label;
              });

    const double clamped = std::min(sol.overlap, 1.0);
    sol.eg = -std::log2(clamped * clamped);
    if (sol.eg == 0) {
        sol.eg = 0;  // drop -0.0
    }
    return sol;
}

GeSolution geometric_entanglement(HypergraphCode h, const SolverPolicy &policy) {
    SolverPolicy p = policy;
    p.seed = splitmix64(policy.seed) ^ splitmix64(0x68673400ULL + h.bits);
    return closest_product(build_state(h), p);
}

DegeneracyPattern degeneracy_pattern(const ProductState &phi) {
    std::array<int, kNumVertices> parent{0, 1, 2, 3};
    auto find = [&](int a) {
        while (parent[a] != a) {
            a = parent[a];
        }
        return a;
    };
    for (int i = 0; i < kNumVertices; i++) {
        for (int j = i + 1; j < kNumVertices; j++) {
            if (phi.qubits[i].fidelity_amplitude(phi.qubits[j]) > kMergeThreshold) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::array<int, kNumVertices> counts{};
    for (int i = 0; i < kNumVertices; i++) {
        counts[find(i)]++;
    }
    std::vector<int> sizes;
    for (int c : counts) {
        if (c) {
            sizes.push_back(c);
        }
    }

    DegeneracyPattern p;
    p.blocks = static_cast<int>(sizes.size());
    p.label = label_for_blocks(sizes);
    for (const QubitState &q : phi.qubits) {
        const bool anchor_x = std::abs(q.x) >= std::abs(q.y);
        const cdouble anchor = anchor_x ? q.x : q.y;
        const cdouble other = anchor_x ? q.y : q.x;
        const cdouble gauged = other * std::conj(anchor) / std::abs(anchor);
        if (std::abs(gauged.imag()) >= kRealityThreshold) {
            p.real = false;
        }
    }
    return p;
}

DegeneracyPattern degeneracy_pattern(const GeSolution &sol) {
    return degeneracy_pattern(sol.witness);
}

ZIteration symmetric_z_iteration(cdouble z0, double tol) {
    if (std::abs(z0 + 1.0) < kPoleDistance) {
        throw std::invalid_argument("z0 must differ from -1");
    }
    ZIteration out{z0};
    for (int step = 1; step <= kZMaxSteps; step++) {
        const cdouble z = out.z;
        const cdouble next = std::conj((1.0 + 2.0 * z - z * z) / ((1.0 + z) * (1.0 + z)));
        out.steps = step;
        if (!std::isfinite(next.real()) || !std::isfinite(next.imag()) || std::abs(next + 1.0) < kPoleDistance) {
            out.z = next;
            out.diverged = true;
            return out;
        }
        const double delta = std::abs(next - z);
        out.z = next;
        if (delta < tol) {
            out.converged = true;
            return out;
        }
    }
    return out;
}

double psi3_closed_form_z() {
    const double tau = std::atan(std::sqrt(37.0 / 27.0)) / 3;
    return -1 - (4 * std::sqrt(3.0) / 3) * std::cos(tau + 2 * std::numbers::pi / 3);
}

double psi3_eg_from_ratio(double z) {
    const double amp = std::pow(1 + z, 3) - 2 * z * z * z;
    const double f2 = amp * amp / (8 * std::pow(1 + z * z, 3));
    return -std::log2(f2);
}

const std::vector<ClosedForm> &closed_form_reference() {
    static const std::vector<ClosedForm> table = [] {
        const double sqrt2 = std::sqrt(2.0);
        const double sqrt3 = std::sqrt(3.0);
        const double sqrt5 = std::sqrt(5.0);
        const double three_fifths = 3 + 2 * std::log2(3.0 / 5.0);
        const double one_plus_sqrt2 = 4 - 2 * std::log2(1 + sqrt2);
        const double log3 = 3 - std::log2(3.0);
        return std::vector<ClosedForm>{
            {5, "3+2log2(3/5)", three_fifths},
            {11, "5-log2(9+3sqrt3)", 5 - std::log2(9 + 3 * sqrt3)},
            {12, "psi3: z^3+3z^2-z-1=0", psi3_eg_from_ratio(psi3_closed_form_z())},
            {14, "1", 1.0},
            {15, "3+2log2(3/5)", three_fifths},
            {16, "4-2log2(1+sqrt5)", 4 - 2 * std::log2(1 + sqrt5)},
            {17, "2.5-log2(1+sqrt2)", 2.5 - std::log2(1 + sqrt2)},
            {18, "1", 1.0},
            {19, "3-log2(3)", log3},
            {20, "4-2log2(1+sqrt2)", one_plus_sqrt2},
            {21, "4-2log2(1+sqrt2)", one_plus_sqrt2},
            {22, "1", 1.0},
            {23, "3-log2(5)", 3 - std::log2(5.0)},
            {25, "3-log2(3)", log3},
            {26, "6-2log2(3+sqrt5)", 6 - 2 * std::log2(3 + sqrt5)},
            {28, "4-2log2(3)", 4 - 2 * std::log2(3.0)},
        };
    }();
    return table;
}

}  // namespace hg4
