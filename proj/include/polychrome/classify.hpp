#pragma once

#include <optional>
#include <span>
#include <string>

#include "polychrome/zn_core.hpp"

namespace polychrome {

enum class CaseTag { Mod3Tiling, FanoCase, GenericTwo, Size2Even, Size2Odd };

std::string to_string(CaseTag tag);

// Parameters of the 3-color case: a = 3^j m_a, b = 3^j m_b.
struct Mod3Detail {
    int j;
    Residue m_a;
    Residue m_b;
};

struct Classification {
    int p;
    CaseTag case_tag;
    std::optional<Mod3Detail> mod3;
    std::optional<Residue> fano_generator; // the element of order 7 playing the role of 1
    Residue subgroup_order = 0;            // |<b>| for the 2-element cases
};

// p_n({0, b}) for a 2-element set: 2 when the translates {x, x + b} form
// even cycles under x -> x + b, else 1. Any 2-element set is accepted; it is
// translated so its smaller element is 0.
Classification poly_number_size2(const ResidueSet& set);

// p_n({0, a, b}) in closed form. Any 3-element set is accepted; it is
// translated so its smallest element is 0.
Classification poly_number_size3(const ResidueSet& set);
Classification poly_number_size3(Residue n, Residue a, Residue b);

// Dispatches on |S| in {2, 3}.
Classification classify(const ResidueSet& set);

// True iff 3 | n and {a mod 3, b mod 3} = {1, 2}. Requires gcd(a, b, n) = 1.
bool mod3_condition(Residue n, Residue a, Residue b);

// Tiling criterion for a set of p^alpha distinct integers: the pairwise
// differences realize at most alpha distinct p-adic valuations.
bool newman_tiles_z(std::span<const Residue> set, Residue p, int alpha);

} // namespace polychrome
