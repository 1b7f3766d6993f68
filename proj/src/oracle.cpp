#include "polychrome/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "polychrome/error.hpp"

namespace polychrome {

namespace {

void require_same_modulus(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw PreconditionError("sets live in different groups: Z_" + std::to_string(a.modulus()) +
                                " and Z_" + std::to_string(b.modulus()));
}

void check_bound(const char* what, Residue n, Residue bound) {
    if (n > bound)
        throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) +
                            " exceeds the configured bound " + std::to_string(bound));
}

// Backtracking k-coloring of Z_n in which every translate a + S is rainbow.
// Elements are visited in breadth-first order over the translate hypergraph
// starting from 0, so each connected block is finished before the next starts.
class ColoringSearch {
  public:
    ColoringSearch(const ResidueSet& set, int k)
        : n_(set.modulus()), k_(k), elements_(set.elements()),
          color_(static_cast<std::size_t>(n_), -1),
          counts_(static_cast<std::size_t>(n_ * k_), 0),
          distinct_(static_cast<std::size_t>(n_), 0),
          uncolored_(static_cast<std::size_t>(n_), static_cast<int>(set.size())) {
        build_order();
    }

    std::optional<Coloring> run() {
        if (!descend(0, -1))
            return std::nullopt;
        return Coloring(k_, color_);
    }

  private:
    // Shifts a with x ∈ a + S.
    template <class F> void for_each_translate_of(Residue x, F&& f) const {
        for (Residue s : elements_)
            f(mod(x - s, n_));
    }

    void build_order() {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        order_.reserve(static_cast<std::size_t>(n_));
        for (Residue root = 0; root < n_; ++root) {
            if (seen[root])
                continue;
            seen[root] = 1;
            std::size_t head = order_.size();
            order_.push_back(root);
            while (head < order_.size()) {
                const Residue x = order_[head++];
                std::vector<Residue> next;
                for_each_translate_of(x, [&](Residue a) {
                    for (Residue s : elements_) {
                        const Residue y = mod(a + s, n_);
                        if (!seen[y]) {
                            seen[y] = 1;
                            next.push_back(y);
                        }
                    }
                });
                std::sort(next.begin(), next.end());
                order_.insert(order_.end(), next.begin(), next.end());
            }
        }
    }

    // Colors x with c; false if some translate through x can no longer
    // collect all k colors. Always leaves the state updated.
    bool assign(Residue x, int c) {
        color_[x] = c;
        bool ok = true;
        for_each_translate_of(x, [&](Residue a) {
            auto& cnt = counts_[static_cast<std::size_t>(a * k_ + c)];
            if (cnt++ == 0)
                ++distinct_[a];
            --uncolored_[a];
            if (k_ - distinct_[a] > uncolored_[a])
                ok = false;
        });
        return ok;
    }

    void unassign(Residue x) {
        const int c = color_[x];
        for_each_translate_of(x, [&](Residue a) {
            auto& cnt = counts_[static_cast<std::size_t>(a * k_ + c)];
            if (--cnt == 0)
                --distinct_[a];
            ++uncolored_[a];
        });
        color_[x] = -1;
    }

    bool descend(std::size_t pos, int max_used) {
        if (pos == order_.size())
            return true;
        const Residue x = order_[pos];
        // Colors are interchangeable: a new color may only be the next unused one.
        const int limit = std::min(k_ - 1, max_used + 1);
        for (int c = 0; c <= limit; ++c) {
            const bool ok = assign(x, c);
            if (ok && descend(pos + 1, std::max(max_used, c)))
                return true;
            unassign(x);
        }
        return false;
    }

    Residue n_;
    int k_;
    std::vector<Residue> elements_;
    std::vector<Residue> order_;
    std::vector<int> color_;
    std::vector<int> counts_; // counts_[a * k + c]: elements of a + S colored c
    std::vector<int> distinct_;
    std::vector<int> uncolored_;
};

} // namespace

std::vector<Violation> verify(const ResidueSet& set, const Coloring& coloring) {
    const Residue n = set.modulus();
    if (coloring.modulus() != n)
        throw PreconditionError("coloring has length " + std::to_string(coloring.modulus()) +
                                " but the group is Z_" + std::to_string(n));
    const int k = coloring.num_colors();
    std::vector<Violation> out;
    std::vector<char> present(static_cast<std::size_t>(k));
    for (Residue a = 0; a < n; ++a) {
        std::fill(present.begin(), present.end(), 0);
        for (Residue s : set.elements())
            present[static_cast<std::size_t>(coloring[mod(a + s, n)])] = 1;
        std::vector<int> missing;
        for (int c = 0; c < k; ++c)
            if (!present[static_cast<std::size_t>(c)])
                missing.push_back(c);
        if (!missing.empty())
            out.push_back({a, set.shifted(a), std::move(missing)});
    }
    return out;
}

std::optional<Coloring> find_polychromatic_coloring(const ResidueSet& set, int k,
                                                    const OracleLimits& limits) {
    check_bound("coloring search", set.modulus(), limits.poly_max);
    if (k < 1)
        throw PreconditionError("number of colors must be positive");
    if (k == 1)
        return Coloring::constant(set.modulus());
    if (static_cast<std::size_t>(k) > set.size())
        return std::nullopt;
    return ColoringSearch(set, k).run();
}

PolyResult brute_force_poly(const ResidueSet& set, const OracleLimits& limits) {
    check_bound("brute_force_poly", set.modulus(), limits.poly_max);
    for (int k = static_cast<int>(set.size()); k >= 2; --k)
        if (auto found = ColoringSearch(set, k).run())
            return {k, std::move(*found)};
    return {1, Coloring::constant(set.modulus())};
}

TileCertificate find_complement(const ResidueSet& set, const OracleLimits& limits) {
    const Residue n = set.modulus();
    const auto size = static_cast<Residue>(set.size());
    if (n % size != 0)
        return {std::nullopt, true};
    check_bound("find_complement", n, limits.tile_max);

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    std::vector<Residue> shifts;

    auto fits = [&](Residue t) {
        return std::none_of(set.elements().begin(), set.elements().end(),
                            [&](Residue s) { return covered[mod(t + s, n)]; });
    };
    auto mark = [&](Residue t, char v) {
        for (Residue s : set.elements())
            covered[mod(t + s, n)] = v;
    };

    // If S ⊕ T = Z_n then S ⊕ (T - t) = Z_n for t ∈ T, so 0 may be placed first.
    mark(0, 1);
    shifts.push_back(0);

    std::function<bool(Residue)> cover_from = [&](Residue start) -> bool {
        Residue e = start;
        while (e < n && covered[e])
            ++e;
        if (e == n)
            return true;
        for (Residue s : set.elements()) {
            const Residue t = mod(e - s, n);
            if (!fits(t))
                continue;
            mark(t, 1);
            shifts.push_back(t);
            if (cover_from(e + 1))
                return true;
            shifts.pop_back();
            mark(t, 0);
        }
        return false;
    };

    if (!cover_from(0))
        return {std::nullopt, true};
    return {ResidueSet(n, shifts), true};
}

bool is_tiling(const ResidueSet& set, const ResidueSet& complement) {
    require_same_modulus(set, complement);
    const Residue n = set.modulus();
    if (static_cast<Residue>(set.size() * complement.size()) != n)
        return false;
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (Residue s : set.elements())
        for (Residue t : complement.elements())
            if (++hits[mod(s + t, n)] > 1)
                return false;
    return true;
}

bool complement_closure_check(const ResidueSet& set, const ResidueSet& complement) {
    require_same_modulus(set, complement);
    if (set.size() != 3 || set.min() != 0)
        throw PreconditionError("complement closure needs S = {0, a, b}, got " + set.to_string());
    if (!complement.contains(0))
        throw PreconditionError("complement must contain 0");
    if (!is_tiling(set, complement))
        throw PreconditionError(set.to_string() + " does not tile with " + complement.to_string());
    const Residue step = set[1] + set[2];
    return std::all_of(complement.elements().begin(), complement.elements().end(),
                       [&](Residue x) { return complement.contains(x + step); });
}

bool is_blocking(const ResidueSet& set, const ResidueSet& blocker) {
    require_same_modulus(set, blocker);
    const Residue n = set.modulus();
    for (Residue a = 0; a < n; ++a) {
        const bool hit = std::any_of(set.elements().begin(), set.elements().end(),
                                     [&](Residue s) { return blocker.contains(a + s); });
        if (!hit)
            return false;
    }
    return true;
}

BlockingResult min_blocking_size(const ResidueSet& set, const OracleLimits& limits) {
    const Residue n = set.modulus();
    check_bound("min_blocking_size", n, std::min<Residue>(limits.blocking_max, 64));

    std::vector<std::uint64_t> masks;
    masks.reserve(static_cast<std::size_t>(n));
    for (Residue a = 0; a < n; ++a) {
        std::uint64_t m = 0;
        for (Residue s : set.elements())
            m |= std::uint64_t{1} << mod(a + s, n);
        masks.push_back(m);
    }

    // Lexicographic combinations of size k. Choosing v next means nothing
    // below v is added later, so a translate lying wholly below v and not
    // yet hit rules out v and every larger candidate.
    std::function<bool(int, Residue, std::uint64_t, std::uint64_t&)> choose =
        [&](int remaining, Residue start, std::uint64_t chosen, std::uint64_t& result) -> bool {
        if (remaining == 0) {
            for (auto m : masks)
                if (!(m & chosen))
                    return false;
            result = chosen;
            return true;
        }
        for (Residue v = start; v <= n - remaining; ++v) {
            const std::uint64_t below = (std::uint64_t{1} << v) - 1;
            bool dead = false;
            for (auto m : masks)
                if ((m & below) == m && !(m & chosen)) {
                    dead = true;
                    break;
                }
            if (dead)
                break;
            if (choose(remaining - 1, v + 1, chosen | (std::uint64_t{1} << v), result))
                return true;
        }
        return false;
    };

    for (int k = 1; k <= n; ++k) {
        std::uint64_t result = 0;
        if (choose(k, 0, 0, result)) {
            std::vector<Residue> elems;
            for (Residue x = 0; x < n; ++x)
                if (result >> x & 1)
                    elems.push_back(x);
            return {k, ResidueSet(n, std::move(elems))};
        }
    }
    throw InternalError("Z_n itself is always blocking");
}

} // namespace polychrome
