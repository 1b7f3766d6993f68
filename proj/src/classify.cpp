#include "polychrome/classify.hpp"

#include <numeric>
#include <set>

#include "polychrome/error.hpp"

namespace polychrome {

namespace {

bool is_prime(Residue p) {
    if (p < 2)
        return false;
    for (Residue d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

Residue power(Residue base, int exp) {
    Residue r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

std::optional<Mod3Detail> mod3_tiling(Residue n, Residue a, Residue b) {
    if (n % 3 != 0)
        return std::nullopt;
    const int j = p_adic_valuation(a, 3);
    if (p_adic_valuation(b, 3) != j)
        return std::nullopt;
    const Residue scale = power(3, j);
    if (n % (3 * scale) != 0)
        return std::nullopt;
    const Residue m_a = a / scale, m_b = b / scale;
    if ((m_a + m_b) % 3 != 0)
        return std::nullopt;
    return Mod3Detail{j, m_a, m_b};
}

// a generates a subgroup of order 7 and b is 3a or 5a.
bool fano_oriented(Residue n, Residue a, Residue b) {
    return subgroup_order(n, a) == 7 && (b == mod(3 * a, n) || b == mod(5 * a, n));
}

} // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::Mod3Tiling:
        return "Mod3Tiling";
    case CaseTag::FanoCase:
        return "FanoCase";
    case CaseTag::GenericTwo:
        return "GenericTwo";
    case CaseTag::Size2Even:
        return "Size2Even";
    case CaseTag::Size2Odd:
        return "Size2Odd";
    }
    return "?";
}

Classification poly_number_size2(const ResidueSet& set) {
    if (set.size() != 2)
        throw PreconditionError("expected a 2-element set, got " + set.to_string());
    const Residue n = set.modulus();
    const Residue b = mod(set[1] - set[0], n);
    const Residue order = subgroup_order(n, b);
    Classification out{order % 2 == 0 ? 2 : 1, order % 2 == 0 ? CaseTag::Size2Even : CaseTag::Size2Odd,
                       std::nullopt, std::nullopt, order};
    return out;
}

Classification poly_number_size3(Residue n, Residue a, Residue b) {
    if (n < 3)
        throw PreconditionError("a 3-element set needs n >= 3");
    a = mod(a, n);
    b = mod(b, n);
    if (a == 0 || b == 0 || a == b)
        throw PreconditionError("degenerate set {0," + std::to_string(a) + "," + std::to_string(b) +
                                "} mod " + std::to_string(n));

    if (auto detail = mod3_tiling(n, a, b))
        return {3, CaseTag::Mod3Tiling, detail, std::nullopt};
    if (n % 7 == 0) {
        if (fano_oriented(n, a, b))
            return {1, CaseTag::FanoCase, std::nullopt, a};
        if (fano_oriented(n, b, a))
            return {1, CaseTag::FanoCase, std::nullopt, b};
    }
    return {2, CaseTag::GenericTwo, std::nullopt, std::nullopt};
}

Classification poly_number_size3(const ResidueSet& set) {
    if (set.size() != 3)
        throw PreconditionError("expected a 3-element set, got " + set.to_string());
    return poly_number_size3(set.modulus(), set[1] - set[0], set[2] - set[0]);
}

Classification classify(const ResidueSet& set) {
    switch (set.size()) {
    case 2:
        return poly_number_size2(set);
    case 3:
        return poly_number_size3(set);
    default:
        throw PreconditionError("closed form only covers sets of size 2 or 3, got " + set.to_string());
    }
}

bool mod3_condition(Residue n, Residue a, Residue b) {
    if (std::gcd(std::gcd(mod(a, n), mod(b, n)), n) != 1)
        throw PreconditionError("mod3_condition needs gcd(a, b, n) = 1");
    if (n % 3 != 0)
        return false;
    const Residue ra = mod(a, 3), rb = mod(b, 3);
    return (ra == 1 && rb == 2) || (ra == 2 && rb == 1);
}

bool newman_tiles_z(std::span<const Residue> set, Residue p, int alpha) {
    if (!is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not prime");
    if (alpha < 1)
        throw PreconditionError("alpha must be positive");
    if (static_cast<Residue>(set.size()) != power(p, alpha))
        throw PreconditionError("set size " + std::to_string(set.size()) + " is not " +
                                std::to_string(p) + "^" + std::to_string(alpha));
    std::set<int> exponents;
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (set[i] == set[j])
                throw PreconditionError("repeated element " + std::to_string(set[i]));
            exponents.insert(p_adic_valuation(set[i] - set[j], p));
        }
    return static_cast<int>(exponents.size()) <= alpha;
}

} // namespace polychrome
