#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ptfree {

/// Colors are 1, 2, 3; 0 means "uncolored".
using Color = std::uint8_t;

/// Bit (c-1) set iff color c is allowed.
using ColorMask = std::uint8_t;

inline constexpr ColorMask all_colors = 0b111;

constexpr ColorMask color_bit(Color c) noexcept { return static_cast<ColorMask>(1U << (c - 1)); }
constexpr bool has_color(ColorMask m, Color c) noexcept { return (m & color_bit(c)) != 0; }
inline int color_count(ColorMask m) noexcept { return std::popcount(static_cast<unsigned>(m)); }

/// Only meaningful when color_count(m) == 1.
inline Color single_color(ColorMask m) noexcept {
    return static_cast<Color>(std::countr_zero(static_cast<unsigned>(m)) + 1);
}

inline std::string mask_to_string(ColorMask m) {
    std::string s;
    for (Color c = 1; c <= 3; ++c) {
        if (has_color(m, c)) s.push_back(static_cast<char>('0' + c));
    }
    return s;
}

/// Per-vertex color lists, indexed by root-graph vertex id.
using ListAssignment = std::vector<ColorMask>;

inline ListAssignment full_lists(std::size_t n) { return ListAssignment(n, all_colors); }

using Cost = std::int64_t;

/// cost(v, c) for c in {1,2,3}; nonnegative.
class CostMap {
public:
    CostMap() = default;
    explicit CostMap(std::size_t n) : costs_(n, {0, 0, 0}) {}

    Cost operator()(VertexId v, Color c) const { return costs_.at(v)[c - 1]; }
    void set(VertexId v, Color c, Cost cost) { costs_.at(v)[c - 1] = cost; }
    std::size_t size() const noexcept { return costs_.size(); }

    friend bool operator==(const CostMap&, const CostMap&) = default;

private:
    std::vector<std::array<Cost, 3>> costs_;
};

}  // namespace ptfree
