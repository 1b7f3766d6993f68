#include "polychrome/construct.hpp"

#include <array>
#include <numeric>

#include "polychrome/error.hpp"
#include "polychrome/oracle.hpp"

namespace polychrome {

namespace {

constexpr int R = 0;
constexpr int B = 1;

void require(bool cond, const std::string& what) {
    if (!cond)
        throw PreconditionError(what);
}

std::string num(Residue x) { return std::to_string(x); }

} // namespace

// EllMatrix ----------------------------------------------------------------

EllMatrix::EllMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows_ >= 1 && cols_ >= 1, "matrix dimensions must be positive");
    require(entries_.size() == static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_),
            "matrix entry count does not match its shape");
}

int EllMatrix::at(long i, long j) const {
    const long r = mod(i, rows_), c = mod(j, cols_);
    return entries_[static_cast<std::size_t>(r * cols_ + c)];
}

bool EllMatrix::every_ell_tile_bichromatic() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const int c = at(i, j);
            if (at(i, j + 1) == c && at(i + 1, j) == c)
                return false;
        }
    return true;
}

std::vector<std::string> EllMatrix::to_letter_rows() const {
    std::vector<std::string> out;
    for (int i = 0; i < rows_; ++i) {
        std::string row;
        for (int j = 0; j < cols_; ++j)
            row.push_back(at(i, j) == R ? 'R' : 'B');
        out.push_back(std::move(row));
    }
    return out;
}

EllMatrix ell_tile_coloring(int rows, int cols) {
    require(rows >= 2 && cols >= 2, "ell-tile coloring needs at least a 2 x 2 matrix");
    std::vector<int> entries(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    auto cell = [&](int i, int j) -> int& { return entries[static_cast<std::size_t>(i * cols + j)]; };
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (rows % 2 == 0)
                cell(i, j) = i % 2 == 0 ? R : B;
            else if (cols % 2 == 0)
                cell(i, j) = j % 2 == 0 ? R : B;
            else
                cell(i, j) = (i - j) % 2 == 0 ? R : B;
        }
    if (rows % 2 == 1 && cols % 2 == 1) {
        // A plain checkerboard makes the corner tile at (s-1, t-1) all R.
        cell(0, cols - 1) = B;
        cell(rows - 1, 0) = B;
    }
    return EllMatrix(rows, cols, std::move(entries));
}

// Cyclic colorings ---------------------------------------------------------

Coloring color_rby(Residue n) {
    require(n >= 3 && n % 3 == 0, "RBY coloring needs 3 | n, got n = " + num(n));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (Residue x = 0; x < n; ++x)
        colors[x] = static_cast<int>(x % 3);
    return Coloring(3, std::move(colors));
}

Coloring color_alternating(Residue n) {
    require(n >= 2 && n % 2 == 0, "alternating coloring needs n even, got n = " + num(n));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (Residue x = 0; x < n; ++x)
        colors[x] = static_cast<int>(x % 2);
    return Coloring(2, std::move(colors));
}

Coloring color_two_odd_even_b(Residue n) {
    require(n >= 3 && n % 2 == 1, "RRBRB... coloring needs n odd, got n = " + num(n));
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (Residue x = 0; x < n; ++x)
        colors[x] = (x == 0 || x % 2 == 1) ? R : B;
    return Coloring(2, std::move(colors));
}

std::vector<int> two_three_blocks(Residue n) {
    require(n % 2 == 1 && n >= 5 && n != 7,
            "an even number of 2s and 3s needs n odd, n >= 5, n != 7; got n = " + num(n));
    std::vector<int> blocks;
    if (n % 4 == 1) {
        blocks.assign(static_cast<std::size_t>((n - 3) / 2), 2);
        blocks.push_back(3);
    } else {
        blocks.assign(static_cast<std::size_t>((n - 9) / 2), 2);
        blocks.insert(blocks.end(), 3, 3);
    }
    return blocks;
}

Coloring color_013(Residue n) {
    std::vector<int> colors;
    colors.reserve(static_cast<std::size_t>(n));
    int c = R;
    for (int len : two_three_blocks(n)) {
        colors.insert(colors.end(), static_cast<std::size_t>(len), c);
        c = 1 - c;
    }
    return Coloring(2, std::move(colors));
}

int odd_b_variant(Residue n, Residue b) {
    require(n >= 9 && n % 2 == 1, "{0,1,b} coloring needs n odd and n >= 9, got n = " + num(n));
    require(b % 2 == 1 && b >= 5 && b <= (n + 1) / 2,
            "{0,1,b} coloring needs b odd with 5 <= b <= ceil(n/2), got b = " + num(b));
    return static_cast<int>(std::min<Residue>(n % (b - 2), 4));
}

Coloring color_01b(Residue n, Residue b) {
    const int variant = odd_b_variant(n, b);
    const Residue period = b - 2;
    const Residue r = n % period;
    const ResidueSet target(n, {0, 1, b});

    // Base pattern with period b - 2: R at y = 0 and odd y, B at even y > 0.
    auto base = [&](Residue x) {
        const Residue y = x % period;
        return (y == 0 || y % 2 == 1) ? R : B;
    };

    std::vector<int> c(static_cast<std::size_t>(n));
    switch (variant) {
    case 0:
        for (Residue x = 0; x < n; ++x)
            c[x] = base(x);
        break;
    case 1:
        for (Residue x = 0; x < n; ++x)
            c[x] = x <= n - b ? base(x) : (x % 2 == 0 ? R : B);
        c[n - 1] = B;
        break;
    case 2:
        for (Residue x = 0; x < n; ++x) {
            if (x <= n - b - 1)
                c[x] = base(x);
            else if (x == n - b)
                c[x] = R;
            else if (x == n - b + 1)
                c[x] = B;
            else
                c[x] = x % 2 == 1 ? R : B;
        }
        break;
    case 3:
        for (Residue x = 0; x < n; ++x) {
            if (x <= n - b - 2)
                c[x] = base(x);
            else if (x == n - b - 1)
                c[x] = R;
            else
                c[x] = x % 2 == 0 ? R : B;
        }
        c[n - 1] = B;
        break;
    default: {
        // r >= 4: base pattern up to the left anchor, B pinned at n - r + 2
        // and n - 1, alternation on [n-b+2, n-2] through the pinned B, and
        // alternation rightwards from the left anchor up to n - b + 1.
        const Residue left = n - b - r + 4;
        const Residue pin = n - r + 2;
        for (Residue x = 0; x <= left; ++x)
            c[x] = base(x);
        for (Residue x = n - b + 2; x <= n - 2; ++x)
            c[x] = (x - pin) % 2 == 0 ? B : R;
        c[n - 1] = B;
        for (Residue x = left + 1; x <= n - b + 1; ++x)
            c[x] = 1 - c[x - 1];
        // One of n - b, n - b + 1 is free; try B at n - b + 1 first.
        constexpr std::array<std::pair<int, int>, 4> options{{{B, R}, {B, B}, {R, R}, {R, B}}};
        for (auto [at_next, at_first] : options) {
            c[n - b + 1] = at_next;
            c[n - b] = at_first;
            Coloring candidate(2, c);
            if (is_polychromatic(target, candidate))
                return candidate;
        }
        throw InternalError("no option at n-b, n-b+1 completes the {0,1," + num(b) + "} coloring of Z_" +
                            num(n));
    }
    }

    Coloring out(2, std::move(c));
    if (!is_polychromatic(target, out))
        throw InternalError("{0,1," + num(b) + "} coloring of Z_" + num(n) + " (r = " + num(r) +
                            ") failed verification");
    return out;
}

Coloring color_size2_cycles(Residue n, Residue b) {
    b = mod(b, n);
    require(b != 0, "the second element must differ from the first");
    const Residue order = subgroup_order(n, b);
    require(order % 2 == 0, "|<" + num(b) + ">| = " + num(order) + " is odd in Z_" + num(n));
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    const Residue cosets = std::gcd(n, b);
    for (Residue start = 0; start < cosets; ++start) {
        Residue y = start;
        for (Residue step = 0; step < order; ++step) {
            colors[y] = static_cast<int>(step % 2);
            y = mod(y + b, n);
        }
    }
    return Coloring(2, std::move(colors));
}

// Coset matrix colorings ---------------------------------------------------

std::vector<std::vector<Residue>> coset_matrix(Residue n, Residue a, Residue b, Residue rows) {
    const Residue cols = subgroup_order(n, b);
    std::vector<std::vector<Residue>> m(static_cast<std::size_t>(rows),
                                        std::vector<Residue>(static_cast<std::size_t>(cols)));
    for (Residue i = 0; i < rows; ++i)
        for (Residue j = 0; j < cols; ++j)
            m[i][j] = mod(a * i + b * j, n);
    return m;
}

namespace {

struct BlockShape {
    Residue s; // gcd(a, n): block width
    Residue t; // gcd(b, n): block height
};

BlockShape check_block_instance(Residue n, Residue a, Residue b) {
    require(n >= 3, "modulus too small");
    a = mod(a, n);
    b = mod(b, n);
    require(std::gcd(std::gcd(a, b), n) == 1, "block coloring needs gcd(a, b, n) = 1");
    const Residue s = std::gcd(a, n), t = std::gcd(b, n);
    require(s > 1 && t > 1, "block coloring needs gcd(a, n) > 1 and gcd(b, n) > 1");
    return {s, t};
}

} // namespace

Residue block_row_shift(Residue n, Residue a, Residue b) {
    a = mod(a, n);
    b = mod(b, n);
    const auto [s, t] = check_block_instance(n, a, b);
    const Residue p = a / s;
    const Residue q = inverse_mod(b / t, n / t); // b q = t (mod n)
    return mod(p * q, n / (s * t));
}

Coloring block_coloring(Residue n, Residue a, Residue b) {
    require(n % 2 == 1, "block coloring needs n odd, got n = " + num(n));
    a = mod(a, n);
    b = mod(b, n);
    const auto [s, t] = check_block_instance(n, a, b);
    const EllMatrix tile = ell_tile_coloring(static_cast<int>(t), static_cast<int>(s));

    const Residue cols = n / t;
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    for (Residue i = 0; i < t; ++i)
        for (Residue j = 0; j < cols; ++j) {
            const Residue m = mod(a * i + b * j, n);
            if (colors[m] != -1)
                throw InternalError("coset matrix repeats " + num(m) + " in its first " + num(t) +
                                    " rows");
            colors[m] = tile.at(static_cast<long>(i), static_cast<long>(j % s));
        }
    return Coloring(2, std::move(colors));
}

// Witness dispatch ---------------------------------------------------------

std::string to_string(WitnessBranch branch) {
    switch (branch) {
    case WitnessBranch::Constant:
        return "constant";
    case WitnessBranch::Rby:
        return "rby";
    case WitnessBranch::Alternating:
        return "alternating";
    case WitnessBranch::OddEvenB:
        return "odd_even_b";
    case WitnessBranch::Color013:
        return "color_013";
    case WitnessBranch::Color01b:
        return "color_01b";
    case WitnessBranch::Block:
        return "block";
    case WitnessBranch::Size2Cycles:
        return "size2_cycles";
    }
    return "?";
}

Witness build_witness(const ResidueSet& set) {
    const Residue n = set.modulus();
    const Classification cls = classify(set);

    auto finish = [&](Coloring reduced, WitnessBranch branch, TransformChain chain,
                      std::optional<CanonicalKind> kind = std::nullopt,
                      std::optional<int> variant = std::nullopt) {
        Coloring coloring = chain.pull_back(reduced);
        if (coloring.num_colors() != cls.p)
            throw InternalError("witness for " + set.to_string() + " mod " + num(n) + " uses " +
                                num(coloring.num_colors()) + " colors, expected " + num(cls.p));
        if (!is_polychromatic(set, coloring))
            throw InternalError("witness for " + set.to_string() + " mod " + num(n) + " via " +
                                to_string(branch) + " failed verification");
        return Witness{std::move(coloring), cls, branch, kind, variant, std::move(chain)};
    };

    if (cls.p == 1)
        return finish(Coloring::constant(n), WitnessBranch::Constant, TransformChain(n));

    if (set.size() == 2)
        return finish(color_size2_cycles(n, set[1] - set[0]), WitnessBranch::Size2Cycles,
                      TransformChain(n));

    if (cls.p == 3) {
        auto reduction = gcd_reduce(set);
        return finish(color_rby(reduction.reduced_set.modulus()), WitnessBranch::Rby,
                      std::move(reduction.chain));
    }

    CanonicalForm form = normalize(set);
    const Residue m = form.reduced_modulus();
    const ResidueSet& reduced = form.reduced_set;
    if (m % 2 == 0)
        return finish(color_alternating(m), WitnessBranch::Alternating, std::move(form.chain), form.kind);

    if (form.kind == CanonicalKind::CaseII)
        return finish(block_coloring(m, reduced[1], reduced[2]), WitnessBranch::Block,
                      std::move(form.chain), form.kind);

    const Residue b = reduced[2];
    if (b % 2 == 0)
        return finish(color_two_odd_even_b(m), WitnessBranch::OddEvenB, std::move(form.chain), form.kind);
    if (b == 3)
        return finish(color_013(m), WitnessBranch::Color013, std::move(form.chain), form.kind);
    return finish(color_01b(m, b), WitnessBranch::Color01b, std::move(form.chain), form.kind,
                  odd_b_variant(m, b));
}

} // namespace polychrome
