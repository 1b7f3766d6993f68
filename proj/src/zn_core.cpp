#include "polychrome/zn_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "polychrome/error.hpp"

namespace polychrome {

namespace {

template <class... Ts> struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

void require_modulus(Residue n) {
    if (n < 1)
        throw PreconditionError("modulus must be positive, got " + std::to_string(n));
}

} // namespace

Residue inverse_mod(Residue u, Residue n) {
    require_modulus(n);
    // Extended Euclid on (u mod n, n).
    Residue old_r = mod(u, n), r = n;
    Residue old_s = 1, s = 0;
    while (r != 0) {
        Residue q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1 && n != 1)
        throw PreconditionError(std::to_string(u) + " is not invertible mod " + std::to_string(n));
    return mod(old_s, n);
}

int p_adic_valuation(Residue x, Residue p) {
    if (p < 2)
        throw PreconditionError("valuation base must be at least 2");
    if (x == 0)
        throw PreconditionError("valuation of 0 is undefined");
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

Residue subgroup_order(Residue n, Residue g) {
    require_modulus(n);
    return n / std::gcd(n, mod(g, n));
}

// ResidueSet ---------------------------------------------------------------

ResidueSet::ResidueSet(Residue modulus, std::vector<Residue> elements)
    : modulus_(modulus), elements_(std::move(elements)) {
    require_modulus(modulus_);
    if (elements_.empty())
        throw PreconditionError("a residue set must be nonempty");
    for (auto& e : elements_)
        e = mod(e, modulus_);
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw PreconditionError("repeated residue in set mod " + std::to_string(modulus_));
}

bool ResidueSet::contains(Residue x) const {
    return std::binary_search(elements_.begin(), elements_.end(), mod(x, modulus_));
}

ResidueSet ResidueSet::shifted(Residue c) const {
    std::vector<Residue> out(elements_);
    for (auto& e : out)
        e += c;
    return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::multiplied(Residue d) const {
    if (std::gcd(mod(d, modulus_), modulus_) != 1)
        throw PreconditionError(std::to_string(d) + " is not a unit mod " + std::to_string(modulus_));
    std::vector<Residue> out(elements_);
    for (auto& e : out)
        e = mod(e * d, modulus_);
    return ResidueSet(modulus_, std::move(out));
}

ResidueSet ResidueSet::reduced_to(Residue new_modulus) const {
    return ResidueSet(new_modulus, elements_);
}

Residue ResidueSet::content() const {
    Residue g = modulus_;
    for (Residue e : elements_)
        g = std::gcd(g, e);
    return g;
}

std::string ResidueSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i)
        os << (i ? "," : "") << elements_[i];
    os << '}';
    return os.str();
}

std::vector<ResidueSet> translates(const ResidueSet& set) {
    std::vector<ResidueSet> out;
    out.reserve(static_cast<std::size_t>(set.modulus()));
    for (Residue a = 0; a < set.modulus(); ++a)
        out.push_back(set.shifted(a));
    return out;
}

// TransformChain -----------------------------------------------------------

TransformChain::TransformChain(Residue source_modulus)
    : source_modulus_(source_modulus), target_modulus_(source_modulus) {
    require_modulus(source_modulus);
}

void TransformChain::push(TransformStep step) {
    const Residue m = target_modulus_;
    std::visit(Overloaded{
                   [&](Translate& t) { t.c = mod(t.c, m); },
                   [&](UnitMultiply& u) {
                       u.d = mod(u.d, m);
                       if (std::gcd(u.d, m) != 1)
                           throw PreconditionError("UnitMultiply(" + std::to_string(u.d) +
                                                   ") is not a unit mod " + std::to_string(m));
                   },
                   [&](ScaleDivide& s) {
                       if (s.d < 1 || m % s.d != 0)
                           throw PreconditionError("ScaleDivide(" + std::to_string(s.d) +
                                                   ") does not divide " + std::to_string(m));
                       target_modulus_ = m / s.d;
                   },
               },
               step);
    steps_.push_back(step);
}

ResidueSet TransformChain::apply(const ResidueSet& set) const {
    if (set.modulus() != source_modulus_)
        throw PreconditionError("set modulus does not match chain source");
    ResidueSet current = set;
    for (const auto& step : steps_) {
        current = std::visit(
            Overloaded{
                [&](const Translate& t) { return current.shifted(t.c); },
                [&](const UnitMultiply& u) { return current.multiplied(u.d); },
                [&](const ScaleDivide& s) {
                    std::vector<Residue> out;
                    for (Residue e : current.elements()) {
                        if (e % s.d != 0)
                            throw PreconditionError("ScaleDivide(" + std::to_string(s.d) +
                                                    ") does not divide element " +
                                                    std::to_string(e));
                        out.push_back(e / s.d);
                    }
                    return ResidueSet(current.modulus() / s.d, std::move(out));
                },
            },
            step);
    }
    return current;
}

Coloring TransformChain::pull_back(const Coloring& coloring) const {
    if (coloring.modulus() != target_modulus_)
        throw PreconditionError("coloring has length " + std::to_string(coloring.modulus()) +
                                ", expected " + std::to_string(target_modulus_));
    // Modulus in force before each step.
    std::vector<Residue> moduli;
    Residue m = source_modulus_;
    for (const auto& step : steps_) {
        moduli.push_back(m);
        if (const auto* s = std::get_if<ScaleDivide>(&step))
            m /= s->d;
    }

    std::vector<int> colors = coloring.colors();
    for (std::size_t i = steps_.size(); i-- > 0;) {
        const Residue before = moduli[i];
        std::vector<int> prev(static_cast<std::size_t>(before));
        std::visit(Overloaded{
                       [&](const Translate& t) {
                           for (Residue y = 0; y < before; ++y)
                               prev[y] = colors[mod(y + t.c, before)];
                       },
                       [&](const UnitMultiply& u) {
                           for (Residue y = 0; y < before; ++y)
                               prev[y] = colors[mod(y * u.d, before)];
                       },
                       [&](const ScaleDivide& s) {
                           // Copy onto <d> and repeat on every coset offset.
                           for (Residue y = 0; y < before; ++y)
                               prev[y] = colors[y / s.d];
                       },
                   },
                   steps_[i]);
        colors = std::move(prev);
    }
    return Coloring(coloring.num_colors(), std::move(colors));
}

std::string to_string(const TransformStep& step) {
    return std::visit(Overloaded{
                          [](const Translate& t) { return "translate(" + std::to_string(t.c) + ")"; },
                          [](const UnitMultiply& u) { return "multiply(" + std::to_string(u.d) + ")"; },
                          [](const ScaleDivide& s) { return "divide(" + std::to_string(s.d) + ")"; },
                      },
                      step);
}

std::string TransformChain::to_string() const {
    if (steps_.empty())
        return "identity";
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (i)
            out += " -> ";
        out += polychrome::to_string(steps_[i]);
    }
    return out;
}

// Normalization ------------------------------------------------------------

std::string to_string(CanonicalKind kind) {
    return kind == CanonicalKind::CaseI ? "CaseI" : "CaseII";
}

GcdReduction gcd_reduce(const ResidueSet& set) {
    TransformChain chain(set.modulus());
    if (set.min() != 0)
        chain.push(Translate{-set.min()});
    ResidueSet current = chain.apply(set);
    if (Residue g = current.content(); g > 1) {
        chain.push(ScaleDivide{g});
        current = chain.apply(set);
    }
    return {std::move(current), std::move(chain)};
}

CanonicalForm normalize(const ResidueSet& set) {
    if (set.size() != 3)
        throw PreconditionError("normalize needs a 3-element set, got " + set.to_string());

    auto [current, chain] = gcd_reduce(set);
    const Residue n = current.modulus();

    for (std::size_t i = 1; i < current.size(); ++i) {
        const Residue u = current[i];
        if (std::gcd(u, n) != 1)
            continue;
        if (u != 1) {
            chain.push(UnitMultiply{inverse_mod(u, n)});
            current = chain.apply(set);
        }
        // current = {0, 1, c}; reflect c into [2, ceil(n/2)] via x -> 1 - x.
        if (current[2] > (n + 1) / 2) {
            chain.push(UnitMultiply{n - 1});
            chain.push(Translate{1});
            current = chain.apply(set);
        }
        return {CanonicalKind::CaseI, std::move(current), std::move(chain)};
    }
    return {CanonicalKind::CaseII, std::move(current), std::move(chain)};
}

Coloring pull_back_coloring(const CanonicalForm& form, const Coloring& coloring) {
    return form.chain.pull_back(coloring);
}

} // namespace polychrome
