#ifndef HG4_HYPERCORE_H
#define HG4_HYPERCORE_H

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hg4 {

constexpr int kNumVertices = 4;
constexpr int kNumBasisStates = 1 << kNumVertices;
constexpr int kNumEdgeMasks = kNumBasisStates - 1;
constexpr uint32_t kNumCodes = 1u << kNumEdgeMasks;

/// A nonempty subset of the four vertices. Bit i is set when vertex i+1 belongs to the edge.
struct EdgeMask {
    uint8_t bits = 0;

    constexpr EdgeMask() = default;
    /// Throws std::invalid_argument unless 1 <= bits <= 15.
    explicit EdgeMask(unsigned bits);

    static EdgeMask loop(int vertex);
    static EdgeMask complement_of(int vertex);

    int cardinality() const;
    bool contains(int vertex) const;
    bool is_loop() const {
        return cardinality() == 1;
    }
    /// Position of this edge inside a HypergraphCode.
    int code_bit() const {
        return bits - 1;
    }

    auto operator<=>(const EdgeMask &) const = default;
};

/// A hypergraph over four vertices, stored as the 15-bit set of its hyperedges.
///
/// Modulo a global sign this is also the identity of a real equally weighted state:
/// the empty hyperedge (a global -1) is never stored.
struct HypergraphCode {
    uint16_t bits = 0;

    constexpr HypergraphCode() = default;
    /// Throws std::invalid_argument if bits >= 2^15.
    explicit HypergraphCode(unsigned bits);

    static HypergraphCode from_edges(const std::vector<EdgeMask> &edges);

    bool has(EdgeMask e) const {
        return (bits >> e.code_bit()) & 1;
    }
    HypergraphCode toggled(EdgeMask e) const;
    bool has_loops() const;
    bool empty() const {
        return bits == 0;
    }
    /// Edges in ascending mask order.
    std::vector<EdgeMask> edges() const;

    auto operator<=>(const HypergraphCode &) const = default;
};

/// Truth table g(mu) of the sign pattern (-1)^g(mu). Bit mu holds g(mu); vertex 1 is the
/// least significant bit of mu.
struct SignFunction {
    uint16_t bits = 0;

    bool operator[](unsigned mu) const {
        return (bits >> mu) & 1;
    }
    auto operator<=>(const SignFunction &) const = default;
};

/// A bijection on {1,2,3,4}; images[v-1] is the image of vertex v.
class Permutation {
   public:
    Permutation();
    /// Throws std::invalid_argument when `images` is not a permutation of {1,2,3,4}.
    explicit Permutation(std::array<int, kNumVertices> images);

    static Permutation identity() {
        return Permutation();
    }
    static Permutation transposition(int a, int b);
    /// All 24 permutations in lexicographic order of their image sequences.
    static const std::vector<Permutation> &all();

    int operator()(int vertex) const;
    EdgeMask operator()(EdgeMask e) const;
    /// (after ∘ before)(v) = after(before(v)).
    friend Permutation compose(const Permutation &after, const Permutation &before);

    const std::array<int, kNumVertices> &images() const {
        return images_;
    }
    bool operator==(const Permutation &) const = default;

   private:
    std::array<int, kNumVertices> images_;
};

SignFunction signs_from_hypergraph(HypergraphCode h);
/// Binary Moebius transform of the truth table. Throws std::invalid_argument when
/// g(0000) = 1: flip the global sign first.
HypergraphCode hypergraph_from_signs(SignFunction s);

/// Edges e \ {vertex} for every stored e containing `vertex`; the empty remainder of a loop
/// is dropped.
std::vector<EdgeMask> neighborhood(HypergraphCode h, int vertex);

/// Local X on `vertex`: E -> N(vertex) Δ E.
HypergraphCode apply_x(HypergraphCode h, int vertex);
/// Local Z on `vertex`: toggles the loop {vertex}.
HypergraphCode apply_z(HypergraphCode h, int vertex);
HypergraphCode permute(HypergraphCode h, const Permutation &p);

/// Maximum edge cardinality; 0 for the empty hypergraph.
int rank(HypergraphCode h);

/// Loop-free representative in the local orbit of `h`. Rank-4 inputs additionally lose all
/// 3-edges (X on the vertex outside each 3-edge, ascending vertex order).
HypergraphCode standardize(HypergraphCode h);

/// H_C = Z^C |H>: bit i of `c` toggles the loop on vertex i+1.
HypergraphCode hypergraph_basis(HypergraphCode h, unsigned c);

/// Parses "1234,123,4". Empty (or all-whitespace) text is the empty hypergraph.
/// Throws std::invalid_argument naming the offending token.
HypergraphCode parse_edges(std::string_view text);

/// Inverse of parse_edges: edges by descending cardinality, then lexicographically.
std::string format_edges(HypergraphCode h);
std::string format_edge(EdgeMask e);

/// Basis label mu_1 mu_2 mu_3 mu_4, e.g. index 1 -> "1000".
std::string basis_label(unsigned mu);
/// Inverse of basis_label. Throws std::invalid_argument on malformed labels.
unsigned basis_index(std::string_view label);

}  // namespace hg4

#endif
