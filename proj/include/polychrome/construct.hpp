#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polychrome/classify.hpp"
#include "polychrome/coloring.hpp"
#include "polychrome/zn_core.hpp"

namespace polychrome {

// A 2-coloring of an s x t matrix; entries are 0 (R) or 1 (B).
class EllMatrix {
  public:
    EllMatrix(int rows, int cols, std::vector<int> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    // Indices wrap mod rows and mod cols.
    int at(long i, long j) const;

    // Whether every ell-tile {(i,j), (i,j+1), (i+1,j)} sees both colors.
    bool every_ell_tile_bichromatic() const;

    std::vector<std::string> to_letter_rows() const;

  private:
    int rows_;
    int cols_;
    std::vector<int> entries_;
};

// Ell-tile 2-coloring of an s x t matrix, s, t >= 2: row stripes when s is
// even, column stripes when t is even, otherwise a checkerboard with the
// corners (0, t-1) and (s-1, 0) recolored.
EllMatrix ell_tile_coloring(int rows, int cols);

// x mod 3. Requires 3 | n.
Coloring color_rby(Residue n);

// x mod 2. Requires n even.
Coloring color_alternating(Residue n);

// RRBRBRB...: 0 at x = 0 and at odd x, 1 at even x > 0. Requires n odd.
// Polychromatic for {0, 1, b} with b even.
Coloring color_two_odd_even_b(Residue n);

// Block lengths (all 2 or 3, an even number of them) used by color_013.
std::vector<int> two_three_blocks(Residue n);

// Runs of 2 or 3 equal colors, alternating. Polychromatic for {0, 1, 3}.
// Requires n odd, n >= 5, n != 7.
Coloring color_013(Residue n);

// Which of the five colorings color_01b uses: r = n mod (b - 2), capped at 4.
int odd_b_variant(Residue n, Residue b);

// 2-coloring polychromatic for {0, 1, b} with n, b odd and
// 5 <= b <= ceil(n/2) (so n >= 9).
Coloring color_01b(Residue n, Residue b);

// 2-coloring that alternates along each cycle of x -> x + b. Requires
// |<b>| even; polychromatic for {0, b}.
Coloring color_size2_cycles(Residue n, Residue b);

// Rows 0..rows-1 of the matrix m_ij = a*i + b*j mod n, j = 0..n/gcd(b,n)-1.
std::vector<std::vector<Residue>> coset_matrix(Residue n, Residue a, Residue b, Residue rows);

// With s = gcd(a, n), t = gcd(b, n): the t x s blocks of the full coset
// matrix shift by this many block columns from one block row to the next.
Residue block_row_shift(Residue n, Residue a, Residue b);

// 2-coloring polychromatic for {0, a, b} when n is odd, gcd(a, b, n) = 1 and
// both gcd(a, n), gcd(b, n) exceed 1. The first gcd(b, n) rows of the coset
// matrix hold every residue once; each residue takes the color of its
// position in a periodic ell-tile coloring of t x s blocks.
Coloring block_coloring(Residue n, Residue a, Residue b);

enum class WitnessBranch {
    Constant,
    Rby,
    Alternating,
    OddEvenB,
    Color013,
    Color01b,
    Block,
    Size2Cycles,
};

std::string to_string(WitnessBranch branch);

struct Witness {
    Coloring coloring;
    Classification classification;
    WitnessBranch branch;
    std::optional<CanonicalKind> kind;  // set when the instance went through normalize
    std::optional<int> odd_b_variant;   // set for Color01b
    TransformChain chain;               // maps the input set to the constructed instance
};

// A coloring of Z_n with exactly p_n(S) colors that is S-polychromatic, for
// |S| in {2, 3}. Every result is checked before it is returned; a failed check
// throws InternalError.
Witness build_witness(const ResidueSet& set);

inline Coloring witness(const ResidueSet& set) { return build_witness(set).coloring; }

} // namespace polychrome
