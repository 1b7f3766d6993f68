#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "polychrome/coloring.hpp"

namespace polychrome {

using Residue = std::int64_t;

// Least nonnegative residue of x mod n.
constexpr Residue mod(Residue x, Residue n) {
    Residue r = x % n;
    return r < 0 ? r + n : r;
}

// Inverse of u mod n; throws PreconditionError unless gcd(u, n) = 1.
Residue inverse_mod(Residue u, Residue n);

// Exponent of the largest power of p dividing x. Requires x != 0, p >= 2.
int p_adic_valuation(Residue x, Residue p);

// |<g>| in Z_n, i.e. n / gcd(n, g).
Residue subgroup_order(Residue n, Residue g);

// A nonempty subset of Z_n, stored sorted with every element reduced mod n.
class ResidueSet {
  public:
    // Elements are reduced mod n and sorted; repeated residues are rejected.
    ResidueSet(Residue modulus, std::vector<Residue> elements);
    ResidueSet(Residue modulus, std::initializer_list<Residue> elements)
        : ResidueSet(modulus, std::vector<Residue>(elements)) {}

    Residue modulus() const { return modulus_; }
    const std::vector<Residue>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    Residue operator[](std::size_t i) const { return elements_[i]; }
    Residue min() const { return elements_.front(); }

    bool contains(Residue x) const;

    ResidueSet shifted(Residue c) const;     // c + S
    ResidueSet multiplied(Residue d) const;  // d * S; d must be a unit
    ResidueSet negated() const { return multiplied(modulus_ - 1); }

    // {e mod n} where e ranges over the elements of S; the modulus must be
    // such that no two elements collide.
    ResidueSet reduced_to(Residue new_modulus) const;

    // gcd of the modulus and every element.
    Residue content() const;

    std::string to_string() const; // "{0,1,3}"

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

  private:
    Residue modulus_;
    std::vector<Residue> elements_;
};

// The n translates a + S for a = 0..n-1, indexed by a.
std::vector<ResidueSet> translates(const ResidueSet& set);

struct Translate {
    Residue c;
};
struct UnitMultiply {
    Residue d;
};
struct ScaleDivide {
    Residue d;
};
using TransformStep = std::variant<Translate, UnitMultiply, ScaleDivide>;

// A sequence of equivalence-preserving maps taking a set in Z_{source} to a
// set in Z_{target}. Translate and UnitMultiply keep the modulus; ScaleDivide(d)
// maps S ⊆ Z_{dm} (every element divisible by d) to S/d ⊆ Z_m.
class TransformChain {
  public:
    explicit TransformChain(Residue source_modulus);

    Residue source_modulus() const { return source_modulus_; }
    Residue target_modulus() const { return target_modulus_; }
    const std::vector<TransformStep>& steps() const { return steps_; }
    bool is_identity() const { return steps_.empty(); }

    // Appends a step, checking it against the modulus current at the end of
    // the chain.
    void push(TransformStep step);

    ResidueSet apply(const ResidueSet& set) const;

    // Pulls a coloring of Z_{target} back to Z_{source}. Polychromatic
    // colorings of apply(S) pull back to polychromatic colorings of S.
    Coloring pull_back(const Coloring& coloring) const;

    std::string to_string() const;

  private:
    Residue source_modulus_;
    Residue target_modulus_;
    std::vector<TransformStep> steps_;
};

std::string to_string(const TransformStep& step);

enum class CanonicalKind { CaseI, CaseII };

std::string to_string(CanonicalKind kind);

struct CanonicalForm {
    CanonicalKind kind;
    ResidueSet reduced_set;
    TransformChain chain;

    Residue reduced_modulus() const { return reduced_set.modulus(); }
};

// Translate so the smallest element is 0, then divide out gcd(S, n).
struct GcdReduction {
    ResidueSet reduced_set;
    TransformChain chain;
};
GcdReduction gcd_reduce(const ResidueSet& set);

// Canonical form of a 3-element set: either {0, 1, b'} with b' <= ceil(n'/2)
// (CaseI), or {0, a, b} with neither a nor b a unit mod n' (CaseII).
CanonicalForm normalize(const ResidueSet& set);

// Pulls a coloring of the reduced instance back to the original modulus.
Coloring pull_back_coloring(const CanonicalForm& form, const Coloring& coloring);

} // namespace polychrome
