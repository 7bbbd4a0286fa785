#ifndef HG4_STATEVEC_H
#define HG4_STATEVEC_H

#include <array>
#include <span>
#include <vector>

#include "hg4/hypercore.h"

namespace hg4 {

/// Real amplitudes of a four-qubit state, indexed by basis index mu (vertex 1 = bit 0).
struct StateVector {
    std::array<double, kNumBasisStates> amps{};

    double norm_squared() const;
    StateVector flipped(int vertex) const;
    /// Largest absolute entrywise difference.
    double distance(const StateVector &other) const;
    /// min(distance(other), distance(-other)).
    double distance_up_to_sign(const StateVector &other) const;
};

/// Dense 16x16 real operator, row-major.
class Operator16 {
   public:
    static constexpr int kDim = kNumBasisStates;

    static Operator16 identity();
    static Operator16 pauli_x(int vertex);
    static Operator16 pauli_z(int vertex);
    /// Multi-controlled Z on the vertices of `e`; a loop is a plain Z.
    static Operator16 controlled_z(EdgeMask e);
    /// -identity, the operator of the empty hyperedge.
    static Operator16 global_flip();

    double &at(int row, int col) {
        return m_[row * kDim + col];
    }
    double at(int row, int col) const {
        return m_[row * kDim + col];
    }

    Operator16 operator*(const Operator16 &rhs) const;
    StateVector operator*(const StateVector &v) const;
    double max_abs_difference(const Operator16 &other) const;

   private:
    std::array<double, kDim * kDim> m_{};
};

/// Reduced density matrix of one or two qubits. Kept qubits are ordered by ascending vertex,
/// the lowest kept vertex being bit 0 of the local index.
struct DensityMatrix {
    int dim = 2;
    std::array<double, 16> m{};

    double at(int row, int col) const {
        return m[row * dim + col];
    }
    double trace() const;
};

/// Cut entropies in bits. be1 follows the cuts 1|234, 2|134, 3|124, 4|123 and be2 follows
/// 12|34, 13|24, 14|23.
struct EntropyProfile {
    std::array<double, 4> be1{};
    std::array<double, 3> be2{};
};

/// Amplitudes (-1)^g(mu) / 4.
StateVector build_state(HypergraphCode h);

/// K_i = X_i times the controlled-Z gates of N(i); a loop on i adds a global -1.
Operator16 stabilizer_operator(HypergraphCode h, int vertex);

/// K_i s = s for every i, and the K_i commute pairwise, within 1e-10.
bool verify_stabilizers(const StateVector &s, HypergraphCode h);
bool verify_stabilizers(HypergraphCode h);

/// prod_{N(i)} U |H> == X_i |H> entrywise within 1e-10, the loop sign included.
bool neighborhood_equivalence_check(HypergraphCode h, int vertex);

/// Partial trace keeping the vertices in `keep_mask` (bit v-1 for vertex v). Throws
/// std::invalid_argument unless one or two vertices are kept.
DensityMatrix reduced_density(const StateVector &s, unsigned keep_mask);

/// Eigenvalues of a symmetric matrix, ascending. Closed form for 2x2, cyclic Jacobi for 4x4.
std::vector<double> symmetric_eigenvalues(const DensityMatrix &d);

/// Von Neumann entropy in bits of a spectrum, with 0 log 0 = 0 and eigenvalues clamped to [0,1].
double entropy_of_spectrum(std::span<const double> eigenvalues);
double entropy(const DensityMatrix &d);

EntropyProfile entropy_profile(const StateVector &s);
EntropyProfile entropy_profile(HypergraphCode h);

}  // namespace hg4

#endif
