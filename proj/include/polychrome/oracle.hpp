#pragma once

#include <optional>
#include <vector>

#include "polychrome/coloring.hpp"
#include "polychrome/zn_core.hpp"

namespace polychrome {

// Size bounds for the exhaustive searches. Exceeding one raises
// BoundExceeded rather than truncating the search.
struct OracleLimits {
    Residue poly_max = 40;
    Residue tile_max = 60;
    Residue blocking_max = 24;
};

// A translate a + S that misses at least one color.
struct Violation {
    Residue shift;
    ResidueSet translate;
    std::vector<int> missing_colors;
};

// Every translate a + S, a = 0..n-1, checked for all coloring.num_colors()
// colors. An empty result means the coloring is S-polychromatic.
std::vector<Violation> verify(const ResidueSet& set, const Coloring& coloring);

inline bool is_polychromatic(const ResidueSet& set, const Coloring& coloring) {
    return verify(set, coloring).empty();
}

// Does an S-polychromatic k-coloring exist? Returns the first one found.
std::optional<Coloring> find_polychromatic_coloring(const ResidueSet& set, int k,
                                                    const OracleLimits& limits = {});

struct PolyResult {
    int p;
    Coloring witness;
};

// Polychromatic number by exhaustive search, trying k = |S|, |S|-1, ..., 2.
PolyResult brute_force_poly(const ResidueSet& set, const OracleLimits& limits = {});

struct TileCertificate {
    std::optional<ResidueSet> complement; // T with S ⊕ T = Z_n and 0 ∈ T
    bool exhausted = false;
};

// Exact cover of Z_n by translates of S.
TileCertificate find_complement(const ResidueSet& set, const OracleLimits& limits = {});

// True iff every element of Z_n is s + t for exactly one pair (s, t) in S x T.
bool is_tiling(const ResidueSet& set, const ResidueSet& complement);

// For S = {0, a, b} tiling with T: x ∈ T implies x + a + b ∈ T.
bool complement_closure_check(const ResidueSet& set, const ResidueSet& complement);

// True iff every translate of S meets T.
bool is_blocking(const ResidueSet& set, const ResidueSet& blocker);

struct BlockingResult {
    std::int64_t size;
    ResidueSet witness;
};

// Smallest blocking set; ties broken by the lexicographically first set.
BlockingResult min_blocking_size(const ResidueSet& set, const OracleLimits& limits = {});

} // namespace polychrome
