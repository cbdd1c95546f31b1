// Shared test fixtures and small independent oracles.
#pragma once

#include <utility>
#include <vector>

#include "stripcolor/geometry.hpp"
#include "stripcolor/poset.hpp"

namespace stripcolor::fixtures {

// Vertical slab [x0, x0 + width] spanning the strip.
inline StripObject slab(long x0, long width) {
    StripObject o;
    o.kind = ObjectKind::convex;
    o.polygon = {Point{Rational(x0), Rational(0)}, Point{Rational(x0 + width), Rational(0)},
                 Point{Rational(x0 + width), Rational(1)}, Point{Rational(x0), Rational(1)}};
    o.base = BaseSegment{Rational(x0), Rational(x0)};
    return o;
}

inline StripObject seg(long x_top, long x_bottom) {
    return StripObject::bare_segment(Rational(x_top), Rational(x_bottom));
}

// Two disjoint 2-chains.
inline Poset two_plus_two() {
    std::vector<std::pair<int, int>> pairs{{0, 1}, {2, 3}};
    return Poset::from_pairs(4, pairs);
}

// Three minimal and three maximal elements, x_i below y_j exactly when i != j
// (elements 0..2 bottom, 3..5 top).
inline Poset standard_example_3() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) pairs.emplace_back(i, 3 + j);
    return Poset::from_pairs(6, pairs);
}

// Twelve-element height-3 fixture: three incomparable pairs (0,9), (1,10),
// (2,11) and six middle elements 3..8 realizing the six mixed orientation
// patterns against the pairs.
inline Poset height3_fixture() {
    std::vector<std::pair<int, int>> pairs{
        {0, 3}, {1, 3}, {3, 11},   // pattern (below, below, above)
        {0, 4}, {2, 4}, {4, 10},   // (below, above, below)
        {1, 5}, {2, 5}, {5, 9},    // (above, below, below)
        {0, 6}, {6, 10}, {6, 11},  // (below, above, above)
        {1, 7}, {7, 9}, {7, 11},   // (above, below, above)
        {2, 8}, {8, 9}, {8, 10},   // (above, above, below)
    };
    return Poset::from_pairs(12, pairs);
}

// Brute-force transitivity of an arbitrary relation matrix.
inline bool relation_is_strict_order(const std::vector<std::vector<bool>>& rel) {
    const int n = static_cast<int>(rel.size());
    for (int i = 0; i < n; ++i) {
        if (rel[i][i]) return false;
        for (int j = 0; j < n; ++j) {
            if (i != j && rel[i][j] && rel[j][i]) return false;
            if (!rel[i][j]) continue;
            for (int k = 0; k < n; ++k)
                if (rel[j][k] && !rel[i][k]) return false;
        }
    }
    return true;
}

}  // namespace stripcolor::fixtures
