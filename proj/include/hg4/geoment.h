#ifndef HG4_GEOMENT_H
#define HG4_GEOMENT_H

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "hg4/hypercore.h"
#include "hg4/statevec.h"

namespace hg4 {

using cdouble = std::complex<double>;

/// x|0> + y|1> with |x|^2 + |y|^2 = 1.
struct QubitState {
    cdouble x{1, 0};
    cdouble y{0, 0};

    /// |<this|other>|, insensitive to global phase.
    double fidelity_amplitude(const QubitState &other) const;
};

/// Candidate closest product state, one QubitState per vertex.
struct ProductState {
    std::array<QubitState, kNumVertices> qubits{};

    /// <s|this> for a real state s.
    cdouble overlap_with(const StateVector &s) const;
};

/// Partition of the qubits by equality of their witness states, plus whether every qubit
/// can be phase-gauged to real amplitudes.
struct DegeneracyPattern {
    /// One of "4", "1,3", "2,2", "1,2,1", "1,1,1,1".
    std::string label;
    int blocks = 0;
    bool real = true;

    char reality() const {
        return real ? 'R' : 'C';
    }
    bool operator==(const DegeneracyPattern &) const = default;
};

struct SolverPolicy {
    /// Restarts drawn uniformly from each qubit's complex unit sphere.
    int restarts = 64;
    /// Extra restarts drawn from real unit vectors (arithmetic stays complex). Negative means
    /// "same as restarts". These expose real maximizers inside degenerate families.
    int real_probes = -1;
    double tol = 1e-12;
    int max_iter = 5000;
    uint64_t seed = 0;

    int probe_count() const {
        return real_probes < 0 ? restarts : real_probes;
    }
    /// Throws std::invalid_argument on restarts < 1, tol <= 0 or max_iter < 1.
    void validate() const;
};

struct GeSolution {
    /// |<psi|Phi>| of the best run.
    double overlap = 0;
    /// -log2(overlap^2), in bits.
    double eg = 0;
    ProductState witness;
    /// Pattern of the witness; `real` is set when any best run has a gauge-real witness.
    DegeneracyPattern pattern;
    /// Runs (restarts and probes) whose overlap is within 1e-9 of the best.
    int restarts_hit = 0;
    int runs = 0;
    /// False when some run exhausted max_iter while still improving by more than tol.
    bool converged = true;
    /// Distinct patterns found among the best runs, coarsest first.
    std::vector<DegeneracyPattern> competing_patterns;
};

/// One alternating sweep over the qubits: each qubit becomes the conjugated, normalized
/// contraction of `s` with the other three. Returns |f| after the sweep.
double ascent_sweep(const StateVector &s, ProductState &phi);

/// Best overlap over all restarts and probes. Among runs within 1e-9 of the best the
/// witness is chosen by: fewest pattern blocks, then a real witness, then lowest run index.
/// Throws std::logic_error if the overlap ever decreases across a sweep (by more than 1e-14).
GeSolution closest_product(const StateVector &s, const SolverPolicy &policy);

/// closest_product on build_state(h) with the seed mixed with h, so each code has its own
/// reproducible restart set.
GeSolution geometric_entanglement(HypergraphCode h, const SolverPolicy &policy = {});

/// Qubits i, j are merged when |<phi_i|phi_j>| > 1 - 1e-6 (transitively). Reality: each qubit
/// is rotated so that its larger amplitude is real and nonnegative; the pattern is real when
/// every remaining imaginary part is below 1e-6.
DegeneracyPattern degeneracy_pattern(const ProductState &phi);
/// Pattern of sol.witness alone, without the any-real rule of GeSolution::pattern.
DegeneracyPattern degeneracy_pattern(const GeSolution &sol);

struct ZIteration {
    cdouble z;
    int steps = 0;
    bool converged = false;
    /// The iterate came within 1e-8 of the pole at -1; redraw z0.
    bool diverged = false;
};

/// z_{k+1} = conj((1 + 2z - z^2) / (1 + z)^2), the symmetric-ansatz update for the
/// three-qubit state with a single 3-edge. Stops when |z_{k+1} - z_k| < tol or after 10^4
/// steps.
ZIteration symmetric_z_iteration(cdouble z0, double tol);

/// Root of z^3 + 3z^2 - z - 1 = 0 at the maximizing fixed point (about 0.6751).
double psi3_closed_form_z();
/// E_g of the single-3-edge state for the symmetric product state with ratio z = y/x.
double psi3_eg_from_ratio(double z);

struct ClosedForm {
    /// Row number shared by the GE tables (1-11 rank 4, 12-28 rank 3).
    int row;
    std::string expression;
    double value;
};

/// Every closed-form GE expression of the rank-4 and rank-3 property tables, by row.
const std::vector<ClosedForm> &closed_form_reference();

}  // namespace hg4

#endif
