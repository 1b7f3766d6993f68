#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polychrome {

// A k-coloring of Z_n: colors()[x] is the color of residue x, always in [0, k).
class Coloring {
  public:
    Coloring(int num_colors, std::vector<int> colors);

    static Coloring constant(std::int64_t modulus);

    // Parses digit text ("012012012") or letter text ("RBYRBY"); k is taken
    // from `num_colors` when positive, else one more than the largest color.
    static Coloring parse(std::string_view text, int num_colors = 0);

    std::int64_t modulus() const { return static_cast<std::int64_t>(colors_.size()); }
    int num_colors() const { return num_colors_; }
    const std::vector<int>& colors() const { return colors_; }
    int operator[](std::int64_t x) const { return colors_[static_cast<std::size_t>(x)]; }

    // Number of elements with each color.
    std::vector<std::int64_t> class_sizes() const;

    std::string to_string() const;  // digits
    std::string to_letters() const; // 0->R, 1->B, 2->Y

    friend bool operator==(const Coloring&, const Coloring&) = default;

  private:
    int num_colors_;
    std::vector<int> colors_;
};

} // namespace polychrome
