#include "hg4/hypercore.h"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

namespace hg4 {
namespace {

// Direct evaluation: g(mu) is the parity of the edges contained in mu.
bool sign_by_definition(HypergraphCode h, unsigned mu) {
    bool g = false;
    for (unsigned e = 1; e < 16; e++) {
        if (h.has(EdgeMask(e)) && (e & mu) == e) {
            g = !g;
        }
    }
    return g;
}

TEST(EdgeMask, RejectsOutOfRange) {
    EXPECT_THROW(EdgeMask(0), std::invalid_argument);
    EXPECT_THROW(EdgeMask(16), std::invalid_argument);
    EXPECT_EQ(EdgeMask(15).cardinality(), 4);
    EXPECT_TRUE(EdgeMask::loop(3).is_loop());
    EXPECT_EQ(EdgeMask::complement_of(2).bits, 0b1101);
    EXPECT_THROW(EdgeMask::loop(0), std::out_of_range);
    EXPECT_THROW(EdgeMask::loop(5), std::out_of_range);
}

TEST(HypergraphCode, RejectsOutOfRange) {
    EXPECT_THROW(HypergraphCode(1u << 15), std::invalid_argument);
    EXPECT_NO_THROW(HypergraphCode((1u << 15) - 1));
}

TEST(Signs, MatchDefinitionOnEveryCode) {
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        const SignFunction g = signs_from_hypergraph(h);
        for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
            ASSERT_EQ(g[mu], sign_by_definition(h, mu)) << "code " << c << " mu " << mu;
        }
    }
}

TEST(Signs, RoundTripIsBijection) {
    std::set<uint16_t> images;
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        const SignFunction g = signs_from_hypergraph(h);
        ASSERT_FALSE(g[0]);
        ASSERT_EQ(hypergraph_from_signs(g), h);
        images.insert(g.bits);
    }
    EXPECT_EQ(images.size(), kNumCodes);
}

TEST(Signs, GlobalSignIsRejected) {
    EXPECT_THROW(hypergraph_from_signs(SignFunction{1}), std::invalid_argument);
}

TEST(Signs, SingleFourEdgeFlipsOnlyAllOnes) {
    const SignFunction g = signs_from_hypergraph(parse_edges("1234"));
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        EXPECT_EQ(g[mu], mu == 15);
    }
}

TEST(Neighborhood, DropsVertexAndEmptyRemainder) {
    const HypergraphCode h = parse_edges("1234,123,24,2");
    const std::vector<EdgeMask> n = neighborhood(h, 2);
    std::set<std::string> got;
    for (EdgeMask e : n) {
        got.insert(format_edge(e));
    }
    EXPECT_EQ(got, (std::set<std::string>{"134", "13", "4"}));
    EXPECT_EQ(neighborhood(h, 4).size(), 2u);
    EXPECT_THROW(neighborhood(h, 0), std::out_of_range);
}

TEST(LocalMoves, WorkedExample) {
    // X on vertex 4 clears the 3-edge opposite to it.
    EXPECT_EQ(format_edges(apply_x(parse_edges("1234,123"), 4)), "1234");
    EXPECT_EQ(format_edges(standardize(parse_edges("1234,123"))), "1234");
}

TEST(LocalMoves, InvolutionsAndCommutation) {
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        for (int i = 1; i <= kNumVertices; i++) {
            ASSERT_EQ(apply_x(apply_x(h, i), i), h);
            ASSERT_EQ(apply_z(apply_z(h, i), i), h);
            for (int j = i + 1; j <= kNumVertices; j++) {
                ASSERT_EQ(apply_x(apply_x(h, i), j), apply_x(apply_x(h, j), i));
            }
        }
    }
}

TEST(Permutation, CompositionMatchesSequentialRelabel) {
    const auto &perms = Permutation::all();
    ASSERT_EQ(perms.size(), 24u);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<uint32_t> code(0, kNumCodes - 1);
    for (int trial = 0; trial < 200; trial++) {
        const HypergraphCode h(code(rng));
        const Permutation &p = perms[trial % 24];
        const Permutation &q = perms[(trial * 7 + 3) % 24];
        EXPECT_EQ(permute(permute(h, p), q), permute(h, compose(q, p)));
    }
    EXPECT_THROW(Permutation({1, 1, 2, 3}), std::invalid_argument);
    EXPECT_EQ(Permutation::transposition(1, 3)(EdgeMask(0b0011)).bits, 0b0110);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(HypergraphCode()), 0);
    EXPECT_EQ(rank(parse_edges("3")), 1);
    EXPECT_EQ(rank(parse_edges("12,3")), 2);
    EXPECT_EQ(rank(parse_edges("124,13")), 3);
    EXPECT_EQ(rank(parse_edges("1234")), 4);
}

TEST(Standardize, LoopFreeAndRankFourHasNoThreeEdges) {
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        const HypergraphCode s = standardize(h);
        ASSERT_FALSE(s.has_loops()) << c;
        if (rank(h) >= 3) {
            ASSERT_EQ(rank(s), rank(h)) << c;
        } else {
            ASSERT_LE(rank(s), 2) << c;
        }
        if (rank(h) == 4) {
            for (EdgeMask e : s.edges()) {
                ASSERT_NE(e.cardinality(), 3) << c;
            }
        }
    }
}

TEST(HypergraphBasis, TogglesLoops) {
    const HypergraphCode h = parse_edges("123");
    EXPECT_EQ(format_edges(hypergraph_basis(h, 0b0101)), "123,1,3");
    EXPECT_EQ(hypergraph_basis(h, 0), h);
}

TEST(TextFormat, RoundTripsEveryCode) {
    for (uint32_t c = 0; c < kNumCodes; c++) {
        const HypergraphCode h(c);
        ASSERT_EQ(parse_edges(format_edges(h)), h);
    }
}

TEST(TextFormat, CanonicalOrdering) {
    EXPECT_EQ(format_edges(parse_edges(" 4, 21 ,3214,13 ")), "1234,12,13,4");
    EXPECT_EQ(format_edges(parse_edges("")), "");
    EXPECT_EQ(format_edges(parse_edges("   ")), "");
}

TEST(TextFormat, ErrorsNameTheToken) {
    auto message = [](std::string_view text) {
        try {
            parse_edges(text);
        } catch (const std::invalid_argument &e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("125").find("5"), std::string::npos);
    EXPECT_NE(message("12,1a").find("1a"), std::string::npos);
    EXPECT_NE(message("112").find("112"), std::string::npos);
    EXPECT_NE(message("12,21").find("21"), std::string::npos);
    EXPECT_NE(message("12,,3"), "no error");
    EXPECT_NE(message("0"), "no error");
}

TEST(BasisLabel, VertexOneIsLeftmost) {
    EXPECT_EQ(basis_label(1), "1000");
    EXPECT_EQ(basis_label(8), "0001");
    for (unsigned mu = 0; mu < kNumBasisStates; mu++) {
        EXPECT_EQ(basis_index(basis_label(mu)), mu);
    }
    EXPECT_THROW(basis_index("102"), std::invalid_argument);
    EXPECT_THROW(basis_index("1020"), std::invalid_argument);
}

}  // namespace
}  // namespace hg4
