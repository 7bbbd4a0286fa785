#include "hg4/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace hg4 {

namespace {

constexpr double kStateTolerance = 1e-10;
constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 50;
constexpr double kNegativeEigenvalueSlack = 1e-10;

// Places the bits of `local` onto the set vertices of `mask`, lowest vertex first.
unsigned scatter_bits(unsigned local, unsigned mask) {
    unsigned out = 0;
    int k = 0;
    for (int v = 0; v < kNumVertices; v++) {
        if ((mask >> v) & 1) {
            if ((local >> k) & 1) {
                out |= 1u << v;
            }
            k++;
        }
    }
    return out;
}

// Diagonal of prod_{e in N(vertex)} U_e, including the -1 contributed by a loop on `vertex`.
std::array<double, kNumBasisStates> neighborhood_phases(HypergraphCode h, int vertex) {
    std::array<double, kNumBasisStates> diag;
    diag.fill(h.has(EdgeMask::loop(vertex)) ? -1.0 : 1.0);
    for (EdgeMask e : neighborhood(h, vertex)) {
        for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
            if ((mu & e.bits) == e.bits) {
                diag[mu] = -diag[mu];
            }
        }
    }
    return diag;
}

std::vector<double> jacobi_eigenvalues(std::array<double, 16> a, int n) {
    for (int sweep = 0; sweep < kJacobiMaxSweeps; sweep++) {
        double off = 0;
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                off += a[p * n + q] * a[p * n + q];
            }
        }
        if (std::sqrt(off) < kJacobiThreshold) {
            break;
        }
        for (int p = 0; p < n; p++) {
            for (int q = p + 1; q < n; q++) {
                const double apq = a[p * n + q];
                if (apq == 0) {
                    continue;
                }
                const double theta = (a[q * n + q] - a[p * n + p]) / (2 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; k++) {
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; k++) {
                    const double apk = a[p * n + k];
                    const double aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> out(n);
    for (int k = 0; k < n; k++) {
        out[k] = a[k * n + k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

double StateVector::norm_squared() const {
    double total = 0;
    for (double a : amps) {
        total += a * a;
    }
    return total;
}

StateVector StateVector::flipped(int vertex) const {
    if (vertex < 1 || vertex > kNumVertices) {
        throw std::out_of_range("vertex outside 1..4");
    }
    const unsigned bit = 1u << (vertex - 1);
    StateVector out;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        out.amps[mu] = amps[mu ^ bit];
    }
    return out;
}

double StateVector::distance(const StateVector &other) const {
    double d = 0;
    for (int k = 0; k < kNumBasisStates; k++) {
        d = std::max(d, std::abs(amps[k] - other.amps[k]));
    }
    return d;
}

double StateVector::distance_up_to_sign(const StateVector &other) const {
    double minus = 0;
    for (int k = 0; k < kNumBasisStates; k++) {
        minus = std::max(minus, std::abs(amps[k] + other.amps[k]));
    }
    return std::min(distance(other), minus);
}

Operator16 Operator16::identity() {
    Operator16 op;
    for (int k = 0; k < kDim; k++) {
        op.at(k, k) = 1;
    }
    return op;
}

Operator16 Operator16::pauli_x(int vertex) {
    if (vertex < 1 || vertex > kNumVertices) {
        throw std::out_of_range("vertex outside 1..4");
    }
    const unsigned bit = 1u << (vertex - 1);
    Operator16 op;
    for (unsigned mu = 0; mu < kDim; mu++) {
        op.at(static_cast<int>(mu ^ bit), static_cast<int>(mu)) = 1;
    }
    return op;
}

Operator16 Operator16::pauli_z(int vertex) {
    return controlled_z(EdgeMask::loop(vertex));
}

Operator16 Operator16::controlled_z(EdgeMask e) {
    Operator16 op = identity();
    for (unsigned mu = 0; mu < kDim; mu++) {
        if ((mu & e.bits) == e.bits) {
            op.at(static_cast<int>(mu), static_cast<int>(mu)) = -1;
        }
    }
    return op;
}

Operator16 Operator16::global_flip() {
    Operator16 op;
    for (int k = 0; k < kDim; k++) {
        op.at(k, k) = -1;
    }
    return op;
}

Operator16 Operator16::operator*(const Operator16 &rhs) const {
    Operator16 out;
    for (int r = 0; r < kDim; r++) {
        for (int k = 0; k < kDim; k++) {
            const double a = at(r, k);
            if (a == 0) {
                continue;
            }
            for (int c = 0; c < kDim; c++) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

StateVector Operator16::operator*(const StateVector &v) const {
    StateVector out;
    for (int r = 0; r < kDim; r++) {
        double total = 0;
        for (int c = 0; c < kDim; c++) {
            total += at(r, c) * v.amps[c];
        }
        out.amps[r] = total;
    }
    return out;
}

double Operator16::max_abs_difference(const Operator16 &other) const {
    double d = 0;
    for (size_t k = 0; k < m_.size(); k++) {
        d = std::max(d, std::abs(m_[k] - other.m_[k]));
    }
    return d;
}

double DensityMatrix::trace() const {
    double t = 0;
    for (int k = 0; k < dim; k++) {
        t += at(k, k);
    }
    return t;
}

StateVector build_state(HypergraphCode h) {
    const SignFunction g = signs_from_hypergraph(h);
    StateVector s;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        s.amps[mu] = g[mu] ? -0.25 : 0.25;
    }
    return s;
}

Operator16 stabilizer_operator(HypergraphCode h, int vertex) {
    const auto diag = neighborhood_phases(h, vertex);
    const unsigned bit = 1u << (vertex - 1);
    Operator16 op;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        op.at(static_cast<int>(mu ^ bit), static_cast<int>(mu)) = diag[mu];
    }
    return op;
}

bool verify_stabilizers(const StateVector &s, HypergraphCode h) {
    std::array<Operator16, kNumVertices> ks;
    for (int v = 1; v <= kNumVertices; v++) {
        ks[v - 1] = stabilizer_operator(h, v);
        if ((ks[v - 1] * s).distance(s) >= kStateTolerance) {
            return false;
        }
    }
    for (int a = 0; a < kNumVertices; a++) {
        for (int b = a + 1; b < kNumVertices; b++) {
            if ((ks[a] * ks[b]).max_abs_difference(ks[b] * ks[a]) >= kStateTolerance) {
                return false;
            }
        }
    }
    return true;
}

bool verify_stabilizers(HypergraphCode h) {
    return verify_stabilizers(build_state(h), h);
}

bool neighborhood_equivalence_check(HypergraphCode h, int vertex) {
    const StateVector s = build_state(h);
    const auto diag = neighborhood_phases(h, vertex);
    StateVector lhs;
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        lhs.amps[mu] = diag[mu] * s.amps[mu];
    }
    return lhs.distance(Operator16::pauli_x(vertex) * s) < kStateTolerance;
}

DensityMatrix reduced_density(const StateVector &s, unsigned keep_mask) {
    const int kept = std::popcount(keep_mask);
    if (keep_mask >= static_cast<unsigned>(kNumBasisStates) || kept < 1 || kept > 2) {
        throw std::invalid_argument("reduced_density keeps one or two qubits");
    }
    const unsigned env_mask = (kNumBasisStates - 1) & ~keep_mask;
    const int env_count = kNumVertices - kept;
    DensityMatrix d;
    d.dim = 1 << kept;
    for (int a = 0; a < d.dim; a++) {
        for (int b = 0; b < d.dim; b++) {
            double total = 0;
            for (unsigned env = 0; env < (1u << env_count); env++) {
                const unsigned e = scatter_bits(env, env_mask);
                total += s.amps[scatter_bits(a, keep_mask) | e] * s.amps[scatter_bits(b, keep_mask) | e];
            }
            d.m[a * d.dim + b] = total;
        }
    }
    return d;
}

std::vector<double> symmetric_eigenvalues(const DensityMatrix &d) {
    if (d.dim == 2) {
        const double mean = (d.at(0, 0) + d.at(1, 1)) / 2;
        const double half_gap = std::hypot((d.at(0, 0) - d.at(1, 1)) / 2, d.at(0, 1));
        return {mean - half_gap, mean + half_gap};
    }
    if (d.dim == 4) {
        return jacobi_eigenvalues(d.m, 4);
    }
    throw std::invalid_argument("density matrices here are 2x2 or 4x4");
}

double entropy_of_spectrum(std::span<const double> eigenvalues) {
    double total = 0;
    for (double lambda : eigenvalues) {
        if (lambda < -kNegativeEigenvalueSlack) {
            throw std::invalid_argument("density matrix has a negative eigenvalue");
        }
        lambda = std::clamp(lambda, 0.0, 1.0);
        if (lambda > 0) {
            total -= lambda * std::log2(lambda);
        }
    }
    // -0.0 for pure states.
    return total == 0 ? 0.0 : total;
}

double entropy(const DensityMatrix &d) {
    const std::vector<double> spectrum = symmetric_eigenvalues(d);
    return entropy_of_spectrum(spectrum);
}

EntropyProfile entropy_profile(const StateVector &s) {
    EntropyProfile p;
    for (int v = 0; v < kNumVertices; v++) {
        p.be1[v] = entropy(reduced_density(s, 1u << v));
    }
    p.be2[0] = entropy(reduced_density(s, 0b0011));
    p.be2[1] = entropy(reduced_density(s, 0b0101));
    p.be2[2] = entropy(reduced_density(s, 0b1001));
    return p;
}

EntropyProfile entropy_profile(HypergraphCode h) {
    return entropy_profile(build_state(h));
}

}  // namespace hg4
