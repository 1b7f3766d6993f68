#include "polychrome/coloring.hpp"

#include <algorithm>

#include "polychrome/error.hpp"

namespace polychrome {

namespace {

constexpr std::string_view kLetters = "RBY";

int color_of_char(char ch) {
    if (ch >= '0' && ch <= '9')
        return ch - '0';
    switch (ch) {
    case 'R':
    case 'r':
        return 0;
    case 'B':
    case 'b':
        return 1;
    case 'Y':
    case 'y':
        return 2;
    default:
        throw PreconditionError(std::string("invalid color character '") + ch + "'");
    }
}

} // namespace

Coloring::Coloring(int num_colors, std::vector<int> colors)
    : num_colors_(num_colors), colors_(std::move(colors)) {
    if (num_colors_ < 1)
        throw PreconditionError("a coloring needs at least one color");
    if (colors_.empty())
        throw PreconditionError("a coloring needs at least one element");
    for (int c : colors_)
        if (c < 0 || c >= num_colors_)
            throw PreconditionError("color " + std::to_string(c) + " outside [0, " +
                                    std::to_string(num_colors_) + ")");
}

Coloring Coloring::constant(std::int64_t modulus) {
    return Coloring(1, std::vector<int>(static_cast<std::size_t>(modulus), 0));
}

Coloring Coloring::parse(std::string_view text, int num_colors) {
    std::vector<int> colors;
    colors.reserve(text.size());
    for (char ch : text)
        colors.push_back(color_of_char(ch));
    if (colors.empty())
        throw PreconditionError("empty coloring");
    int k = num_colors > 0 ? num_colors : *std::max_element(colors.begin(), colors.end()) + 1;
    return Coloring(k, std::move(colors));
}

std::vector<std::int64_t> Coloring::class_sizes() const {
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(num_colors_), 0);
    for (int c : colors_)
        ++sizes[static_cast<std::size_t>(c)];
    return sizes;
}

std::string Coloring::to_string() const {
    std::string out;
    out.reserve(colors_.size());
    for (int c : colors_)
        out.push_back(static_cast<char>('0' + c));
    return out;
}

std::string Coloring::to_letters() const {
    std::string out;
    out.reserve(colors_.size());
    for (int c : colors_)
        out.push_back(c < static_cast<int>(kLetters.size()) ? kLetters[static_cast<std::size_t>(c)]
                                                            : static_cast<char>('0' + c));
    return out;
}

} // namespace polychrome
