#include "hg4/hypercore.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace hg4 {

namespace {

void check_vertex(int vertex) {
    if (vertex < 1 || vertex > kNumVertices) {
        throw std::out_of_range("vertex " + std::to_string(vertex) + " is outside 1..4");
    }
}

// In-place GF(2) zeta transform over the subset lattice; it is its own inverse.
uint16_t subset_parity_transform(uint16_t table) {
    for (int v = 0; v < kNumVertices; v++) {
        const unsigned bit = 1u << v;
        for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
            if (mu & bit) {
                table ^= static_cast<uint16_t>(((table >> (mu ^ bit)) & 1u) << mu);
            }
        }
    }
    return table;
}

std::string trim(std::string_view text) {
    size_t a = 0;
    size_t b = text.size();
    while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) {
        a++;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) {
        b--;
    }
    return std::string(text.substr(a, b - a));
}

}  // namespace

EdgeMask::EdgeMask(unsigned b) : bits(static_cast<uint8_t>(b)) {
    if (b == 0 || b > static_cast<unsigned>(kNumEdgeMasks)) {
        throw std::invalid_argument("edge mask " + std::to_string(b) + " is outside 1..15");
    }
}

EdgeMask EdgeMask::loop(int vertex) {
    check_vertex(vertex);
    return EdgeMask(1u << (vertex - 1));
}

EdgeMask EdgeMask::complement_of(int vertex) {
    check_vertex(vertex);
    return EdgeMask(kNumEdgeMasks ^ (1u << (vertex - 1)));
}

int EdgeMask::cardinality() const {
    return std::popcount(static_cast<unsigned>(bits));
}

bool EdgeMask::contains(int vertex) const {
    check_vertex(vertex);
    return (bits >> (vertex - 1)) & 1;
}

HypergraphCode::HypergraphCode(unsigned b) : bits(static_cast<uint16_t>(b)) {
    if (b >= kNumCodes) {
        throw std::invalid_argument("hypergraph code " + std::to_string(b) + " needs more than 15 bits");
    }
}

HypergraphCode HypergraphCode::from_edges(const std::vector<EdgeMask> &edges) {
    HypergraphCode h;
    for (EdgeMask e : edges) {
        h.bits |= static_cast<uint16_t>(1u << e.code_bit());
    }
    return h;
}

HypergraphCode HypergraphCode::toggled(EdgeMask e) const {
    HypergraphCode h = *this;
    h.bits ^= static_cast<uint16_t>(1u << e.code_bit());
    return h;
}

bool HypergraphCode::has_loops() const {
    for (int v = 1; v <= kNumVertices; v++) {
        if (has(EdgeMask::loop(v))) {
            return true;
        }
    }
    return false;
}

std::vector<EdgeMask> HypergraphCode::edges() const {
    std::vector<EdgeMask> out;
    for (unsigned e = 1; e <= kNumEdgeMasks; e++) {
        if ((bits >> (e - 1)) & 1) {
            out.push_back(EdgeMask(e));
        }
    }
    return out;
}

Permutation::Permutation() : images_{1, 2, 3, 4} {
}

Permutation::Permutation(std::array<int, kNumVertices> images) : images_(images) {
    unsigned seen = 0;
    for (int v : images_) {
        if (v < 1 || v > kNumVertices || (seen >> (v - 1)) & 1) {
            throw std::invalid_argument("not a permutation of {1,2,3,4}");
        }
        seen |= 1u << (v - 1);
    }
}

Permutation Permutation::transposition(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    std::array<int, kNumVertices> images{1, 2, 3, 4};
    std::swap(images[a - 1], images[b - 1]);
    return Permutation(images);
}

const std::vector<Permutation> &Permutation::all() {
    static const std::vector<Permutation> perms = [] {
        std::vector<Permutation> out;
        std::array<int, kNumVertices> images{1, 2, 3, 4};
        do {
            out.emplace_back(images);
        } while (std::next_permutation(images.begin(), images.end()));
        return out;
    }();
    return perms;
}

int Permutation::operator()(int vertex) const {
    check_vertex(vertex);
    return images_[vertex - 1];
}

EdgeMask Permutation::operator()(EdgeMask e) const {
    unsigned out = 0;
    for (int v = 1; v <= kNumVertices; v++) {
        if ((e.bits >> (v - 1)) & 1) {
            out |= 1u << (images_[v - 1] - 1);
        }
    }
    return EdgeMask(out);
}

Permutation compose(const Permutation &after, const Permutation &before) {
    std::array<int, kNumVertices> images{};
    for (int v = 1; v <= kNumVertices; v++) {
        images[v - 1] = after(before(v));
    }
    return Permutation(images);
}

SignFunction signs_from_hypergraph(HypergraphCode h) {
    // Coefficient table indexed by edge mask; index 0 (the global phase) is always clear.
    const auto anf = static_cast<uint16_t>(h.bits << 1);
    return SignFunction{subset_parity_transform(anf)};
}

HypergraphCode hypergraph_from_signs(SignFunction s) {
    if (s[0]) {
        throw std::invalid_argument("sign function has g(0000) = 1; flip the global sign first");
    }
    const uint16_t anf = subset_parity_transform(s.bits);
    return HypergraphCode(static_cast<unsigned>(anf >> 1));
}

std::vector<EdgeMask> neighborhood(HypergraphCode h, int vertex) {
    check_vertex(vertex);
    const unsigned bit = 1u << (vertex - 1);
    std::vector<EdgeMask> out;
    for (EdgeMask e : h.edges()) {
        if ((e.bits & bit) && e.bits != bit) {
            out.push_back(EdgeMask(e.bits & ~bit));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

HypergraphCode apply_x(HypergraphCode h, int vertex) {
    HypergraphCode out = h;
    for (EdgeMask e : neighborhood(h, vertex)) {
        out = out.toggled(e);
    }
    return out;
}

HypergraphCode apply_z(HypergraphCode h, int vertex) {
    return h.toggled(EdgeMask::loop(vertex));
}

HypergraphCode permute(HypergraphCode h, const Permutation &p) {
    HypergraphCode out;
    for (EdgeMask e : h.edges()) {
        out = out.toggled(p(e));
    }
    return out;
}

int rank(HypergraphCode h) {
    int r = 0;
    for (EdgeMask e : h.edges()) {
        r = std::max(r, e.cardinality());
    }
    return r;
}

HypergraphCode standardize(HypergraphCode h) {
    constexpr int kMaxPasses = 16;
    const bool full_rank = rank(h) == kNumVertices;
    for (int pass = 0; pass < kMaxPasses; pass++) {
        for (int v = 1; v <= kNumVertices; v++) {
            if (h.has(EdgeMask::loop(v))) {
                h = apply_z(h, v);
            }
        }
        if (!full_rank) {
            return h;
        }
        bool changed = false;
        for (int v = 1; v <= kNumVertices; v++) {
            if (h.has(EdgeMask::complement_of(v))) {
                h = apply_x(h, v);
                changed = true;
            }
        }
        if (!changed && !h.has_loops()) {
            return h;
        }
    }
    throw std::logic_error("standardize did not reach a fixed point");
}

HypergraphCode hypergraph_basis(HypergraphCode h, unsigned c) {
    if (c >= static_cast<unsigned>(kNumBasisStates)) {
        throw std::invalid_argument("basis selector must have 4 bits");
    }
    for (int v = 1; v <= kNumVertices; v++) {
        if ((c >> (v - 1)) & 1) {
            h = apply_z(h, v);
        }
    }
    return h;
}

HypergraphCode parse_edges(std::string_view text) {
    const std::string body = trim(text);
    HypergraphCode h;
    if (body.empty()) {
        return h;
    }
    size_t start = 0;
    while (true) {
        const size_t comma = body.find(',', start);
        const std::string token =
            trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        if (token.empty()) {
            throw std::invalid_argument("empty hyperedge in \"" + body + "\"");
        }
        unsigned mask = 0;
        for (char c : token) {
            if (c < '1' || c > '4') {
                throw std::invalid_argument("invalid vertex '" + std::string(1, c) + "' in hyperedge \"" + token +
                                            "\" (vertices are 1-4)");
            }
            const unsigned bit = 1u << (c - '1');
            if (mask & bit) {
                throw std::invalid_argument("duplicate vertex '" + std::string(1, c) + "' in hyperedge \"" + token +
                                            "\"");
            }
            mask |= bit;
        }
        const EdgeMask e(mask);
        if (h.has(e)) {
            throw std::invalid_argument("duplicate hyperedge \"" + token + "\"");
        }
        h = h.toggled(e);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return h;
}

std::string format_edge(EdgeMask e) {
    std::string out;
    for (int v = 1; v <= kNumVertices; v++) {
        if ((e.bits >> (v - 1)) & 1) {
            out.push_back(static_cast<char>('0' + v));
        }
    }
    return out;
}

std::string format_edges(HypergraphCode h) {
    std::vector<std::string> labels;
    for (EdgeMask e : h.edges()) {
        labels.push_back(format_edge(e));
    }
    std::sort(labels.begin(), labels.end(), [](const std::string &a, const std::string &b) {
        if (a.size() != b.size()) {
            return a.size() > b.size();
        }
        return a < b;
    });
    std::string out;
    for (size_t k = 0; k < labels.size(); k++) {
        if (k) {
            out.push_back(',');
        }
        out += labels[k];
    }
    return out;
}

std::string basis_label(unsigned mu) {
    std::string out(kNumVertices, '0');
    for (int v = 0; v < kNumVertices; v++) {
        if ((mu >> v) & 1) {
            out[v] = '1';
        }
    }
    return out;
}

unsigned basis_index(std::string_view label) {
    if (label.size() != kNumVertices) {
        throw std::invalid_argument("basis label must have 4 characters");
    }
    unsigned mu = 0;
    for (int v = 0; v < kNumVertices; v++) {
        if (label[v] == '1') {
            mu |= 1u << v;
        } else if (label[v] != '0') {
            throw std::invalid_argument("basis label must be binary");
        }
    }
    return mu;
}

}  // namespace hg4
