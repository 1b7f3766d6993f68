#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "polychrome/construct.hpp"
#include "polychrome/error.hpp"
#include "polychrome/oracle.hpp"

using namespace polychrome;

// =============================================================================
// Simple periodic colorings
// =============================================================================

TEST(ColorRby, Examples) {
    EXPECT_EQ(color_rby(3).to_string(), "012");
    EXPECT_EQ(color_rby(9).to_string(), "012012012");
    EXPECT_EQ(color_rby(9).to_letters(), "RBYRBYRBY");
    EXPECT_TRUE(is_polychromatic(ResidueSet(6, {0, 1, 2}), color_rby(6)));
    EXPECT_THROW(color_rby(10), PreconditionError);
}

TEST(ColorAlternating, Examples) {
    EXPECT_EQ(color_alternating(4).to_string(), "0101");
    EXPECT_TRUE(is_polychromatic(ResidueSet(6, {0, 2, 3}), color_alternating(6)));
    EXPECT_TRUE(is_polychromatic(ResidueSet(8, {0, 1, 5}), color_alternating(8)));
    EXPECT_THROW(color_alternating(7), PreconditionError);
}

TEST(ColorTwoOddEvenB, Examples) {
    EXPECT_EQ(color_two_odd_even_b(5).to_string(), "00101");
    EXPECT_TRUE(is_polychromatic(ResidueSet(5, {0, 1, 2}), color_two_odd_even_b(5)));
    EXPECT_EQ(color_two_odd_even_b(7).to_string(), "0010101");
    EXPECT_TRUE(is_polychromatic(ResidueSet(7, {0, 1, 4}), color_two_odd_even_b(7)));
    EXPECT_EQ(color_two_odd_even_b(9).to_string(), "001010101");
    EXPECT_TRUE(is_polychromatic(ResidueSet(9, {0, 1, 6}), color_two_odd_even_b(9)));
    EXPECT_EQ(color_two_odd_even_b(9).to_letters(), "RRBRBRBRB");
    EXPECT_THROW(color_two_odd_even_b(8), PreconditionError);
}

TEST(ColorTwoOddEvenB, EveryEvenB) {
    for (Residue n = 3; n <= 151; n += 2)
        for (Residue b = 2; b < n; b += 2)
            EXPECT_TRUE(is_polychromatic(ResidueSet(n, {0, 1, b}), color_two_odd_even_b(n)))
                << "{0,1," << b << "} mod " << n;
}

// =============================================================================
// {0, 1, 3}
// =============================================================================

TEST(Color013, Examples) {
    EXPECT_EQ(two_three_blocks(9), (std::vector<int>{2, 2, 2, 3}));
    EXPECT_EQ(color_013(9).to_letters(), "RRBBRRBBB");
    EXPECT_EQ(two_three_blocks(11), (std::vector<int>{2, 3, 3, 3}));
    EXPECT_EQ(color_013(11).to_letters(), "RRBBBRRRBBB");
    EXPECT_EQ(color_013(11).to_string(), "00111000111");
    EXPECT_EQ(color_013(5).to_string(), "00111");
    EXPECT_TRUE(is_polychromatic(ResidueSet(5, {0, 1, 3}), color_013(5)));
}

TEST(Color013, RejectsBadModuli) {
    EXPECT_THROW(color_013(8), PreconditionError);
    EXPECT_THROW(color_013(3), PreconditionError);
    EXPECT_THROW(color_013(7), PreconditionError);
}

TEST(Color013, EvenBlockCountSummingToN) {
    for (Residue n = 5; n <= 501; n += 2) {
        if (n == 7)
            continue;
        const auto blocks = two_three_blocks(n);
        EXPECT_EQ(blocks.size() % 2, 0u) << n;
        EXPECT_EQ(std::accumulate(blocks.begin(), blocks.end(), Residue{0}), n);
        for (int len : blocks)
            EXPECT_TRUE(len == 2 || len == 3);
        EXPECT_TRUE(is_polychromatic(ResidueSet(n, {0, 1, 3}), color_013(n))) << n;
    }
}

// =============================================================================
// {0, 1, b}, n and b odd
// =============================================================================

TEST(Color01b, PeriodicBasePattern) {
    // b - 2 = 3 divides 15: RRB repeated.
    EXPECT_EQ(odd_b_variant(15, 5), 0);
    EXPECT_EQ(color_01b(15, 5).to_string(), "001001001001001");
    EXPECT_TRUE(is_polychromatic(ResidueSet(15, {0, 1, 5}), color_01b(15, 5)));
}

TEST(Color01b, EachRemainderVariant) {
    EXPECT_EQ(odd_b_variant(13, 5), 1);
    EXPECT_TRUE(is_polychromatic(ResidueSet(13, {0, 1, 5}), color_01b(13, 5)));
    EXPECT_EQ(odd_b_variant(17, 7), 2);
    EXPECT_TRUE(is_polychromatic(ResidueSet(17, {0, 1, 7}), color_01b(17, 7)));
    EXPECT_EQ(odd_b_variant(23, 9), 2);
    EXPECT_TRUE(is_polychromatic(ResidueSet(23, {0, 1, 9}), color_01b(23, 9)));
    EXPECT_EQ(odd_b_variant(24 + 1, 9), 4);
    EXPECT_TRUE(is_polychromatic(ResidueSet(25, {0, 1, 9}), color_01b(25, 9)));
    EXPECT_EQ(odd_b_variant(23, 7), 3);
    EXPECT_TRUE(is_polychromatic(ResidueSet(23, {0, 1, 7}), color_01b(23, 7)));
}

TEST(Color01b, RejectsPreconditionViolations) {
    EXPECT_THROW(color_01b(7, 5), PreconditionError);   // n < 9
    EXPECT_THROW(color_01b(10, 5), PreconditionError);  // n even
    EXPECT_THROW(color_01b(15, 6), PreconditionError);  // b even
    EXPECT_THROW(color_01b(15, 3), PreconditionError);  // b < 5
    EXPECT_THROW(color_01b(15, 9), PreconditionError);  // b > ceil(n/2)
}

TEST(Color01b, SweepAllOddInstances) {
    std::map<int, int> seen;
    for (Residue n = 9; n <= 251; n += 2)
        for (Residue b = 5; b <= (n + 1) / 2; b += 2) {
            const int variant = odd_b_variant(n, b);
            ++seen[variant];
            const Coloring c = color_01b(n, b);
            EXPECT_EQ(c.num_colors(), 2);
            EXPECT_TRUE(is_polychromatic(ResidueSet(n, {0, 1, b}), c)) << "{0,1," << b << "} mod " << n;
        }
    for (int v = 0; v <= 4; ++v)
        EXPECT_GT(seen[v], 0) << "variant " << v << " never exercised";
}

// =============================================================================
// Ell-tile matrices and the coset-matrix coloring
// =============================================================================

TEST(EllTile, StripesAndCheckerboard) {
    EXPECT_EQ(ell_tile_coloring(2, 3).to_letter_rows(), (std::vector<std::string>{"RRR", "BBB"}));
    EXPECT_EQ(ell_tile_coloring(5, 3).to_letter_rows(),
              (std::vector<std::string>{"RBB", "BRB", "RBR", "BRB", "BBR"}));
    EXPECT_EQ(ell_tile_coloring(3, 3).to_letter_rows(), (std::vector<std::string>{"RBB", "BRB", "BBR"}));
    EXPECT_EQ(ell_tile_coloring(3, 4).to_letter_rows(),
              (std::vector<std::string>{"RBRB", "RBRB", "RBRB"}));
}

TEST(EllTile, EveryTileBichromatic) {
    for (int s = 2; s <= 12; ++s)
        for (int t = 2; t <= 12; ++t)
            EXPECT_TRUE(ell_tile_coloring(s, t).every_ell_tile_bichromatic()) << s << "x" << t;
}

TEST(EllTile, PlainCheckerboardFailsOnOddTorus) {
    std::vector<int> board;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j)
            board.push_back((i + j) % 2);
    EXPECT_FALSE(EllMatrix(3, 5, board).every_ell_tile_bichromatic());
}

TEST(EllTile, RejectsSmallShapes) {
    EXPECT_THROW(ell_tile_coloring(1, 3), PreconditionError);
    EXPECT_THROW(ell_tile_coloring(3, 1), PreconditionError);
}

TEST(BlockColoring, WorkedExampleCorner) {
    const Coloring c = block_coloring(105, 18, 25);
    EXPECT_EQ(c[0], 0);
    EXPECT_EQ(c[18], 1);
    EXPECT_EQ(c[25], 1);
    EXPECT_TRUE(is_polychromatic(ResidueSet(105, {0, 18, 25}), c));
    EXPECT_EQ(block_row_shift(105, 18, 25), 4);
}

TEST(BlockColoring, CosetMatrixRows) {
    const auto m = coset_matrix(105, 18, 25, 2);
    ASSERT_EQ(m.size(), 2u);
    ASSERT_EQ(m[0].size(), 21u);
    EXPECT_EQ(m[0][3], 75);
    EXPECT_EQ(m[0][20], 80);
    EXPECT_EQ(m[1][0], 18);
    EXPECT_EQ(m[1][20], 98);
}

TEST(BlockColoring, OtherInstance) {
    EXPECT_TRUE(is_polychromatic(ResidueSet(45, {0, 9, 5}), block_coloring(45, 9, 5)));
}

TEST(BlockColoring, RejectsPreconditionViolations) {
    EXPECT_THROW(block_coloring(30, 6, 10), PreconditionError); // n even
    EXPECT_THROW(block_coloring(45, 3, 9), PreconditionError);  // common factor 3
    EXPECT_THROW(block_coloring(45, 1, 9), PreconditionError);  // a is a unit
}

TEST(BlockColoring, FirstRowsCoverEachResidueOnce) {
    for (Residue n = 15; n <= 231; n += 2)
        for (Residue a = 1; a < n; ++a)
            for (Residue b = a + 1; b < n; ++b) {
                if (std::gcd(std::gcd(a, b), n) != 1 || std::gcd(a, n) == 1 || std::gcd(b, n) == 1)
                    continue;
                const Residue t = std::gcd(b, n);
                const auto rows = coset_matrix(n, a, b, t);
                std::vector<int> hits(static_cast<std::size_t>(n), 0);
                for (const auto& row : rows)
                    for (Residue x : row)
                        ++hits[x];
                EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }))
                    << "{0," << a << "," << b << "} mod " << n;
                EXPECT_TRUE(is_polychromatic(ResidueSet(n, {0, a, b}), block_coloring(n, a, b)));
            }
}

// =============================================================================
// Witness dispatch
// =============================================================================

TEST(Witness, Examples) {
    EXPECT_EQ(witness(ResidueSet(9, {0, 1, 2})).to_string(), "012012012");
    EXPECT_EQ(witness(ResidueSet(7, {0, 1, 3})).to_string(), "0000000");
    EXPECT_EQ(witness(ResidueSet(11, {0, 1, 3})).to_string(), "00111000111");

    const Witness w = build_witness(ResidueSet(105, {0, 18, 25}));
    EXPECT_EQ(w.branch, WitnessBranch::Block);
    EXPECT_EQ(w.coloring.num_colors(), 2);
    EXPECT_TRUE(is_polychromatic(ResidueSet(105, {0, 18, 25}), w.coloring));
}

TEST(Witness, ScaledInstancesPullBack) {
    const Witness rby = build_witness(ResidueSet(18, {0, 2, 4}));
    EXPECT_EQ(rby.branch, WitnessBranch::Rby);
    EXPECT_EQ(rby.coloring.to_string(), "001122001122001122");

    const Witness fano = build_witness(ResidueSet(21, {0, 3, 9}));
    EXPECT_EQ(fano.branch, WitnessBranch::Constant);
    EXPECT_EQ(fano.coloring, Coloring::constant(21));
}

TEST(Witness, SizeTwo) {
    for (Residue n = 2; n <= 60; ++n)
        for (Residue b = 1; b < n; ++b) {
            const ResidueSet s(n, {0, b});
            const Witness w = build_witness(s);
            EXPECT_EQ(w.coloring.num_colors(), classify(s).p);
            EXPECT_TRUE(is_polychromatic(s, w.coloring));
        }
    EXPECT_EQ(witness(ResidueSet(8, {0, 3})).to_string(), "01010101");
}

TEST(Witness, RejectsLargeSets) {
    EXPECT_THROW(witness(ResidueSet(9, {0, 1, 2, 3})), PreconditionError);
}

TEST(Witness, ColorClassesAreBlockingSets) {
    for (Residue n = 3; n <= 30; ++n)
        for (Residue a = 1; a < n; ++a)
            for (Residue b = a + 1; b < n; ++b) {
                const ResidueSet s(n, {0, a, b});
                const Coloring c = witness(s);
                for (int color = 0; color < c.num_colors(); ++color) {
                    std::vector<Residue> cls;
                    for (Residue x = 0; x < n; ++x)
                        if (c[x] == color)
                            cls.push_back(x);
                    ASSERT_FALSE(cls.empty());
                    EXPECT_TRUE(is_blocking(s, ResidueSet(n, cls)));
                }
            }
}
