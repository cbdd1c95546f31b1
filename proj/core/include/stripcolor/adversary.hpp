// Recursive adversary forcing any on-line colorer to spend at least k colors
// on segments attached to a line, while the whole family stays triangle-free.
//
// A run of strength k places exactly 2^k - 1 segments strictly inside its
// region and names a vertical witness line such that the pierced segments are
// pairwise disjoint, all attach strictly right of the line, and carry at
// least k distinct colors. All placements are exact rational midpoints of
// measured clearances; the adversary itself uses no randomness.
#pragma once

#include <span>
#include <vector>

#include "stripcolor/engine.hpp"
#include "stripcolor/geometry.hpp"

namespace stripcolor {

// Axis-aligned rectangle with its bottom side on the line y = 0.
struct Region {
    Rational x_left;
    Rational x_right;
    Rational y_top;
};

struct AdversaryOutcome {
    std::vector<AttachedSegment> family;   // presentation order
    VerticalLine witness;
    std::vector<int> pierced;              // indices into family, ascending
    std::vector<Color> colors_on_pierced;  // distinct colors, sorted
    Transcript<AttachedSegment> transcript;
};

AdversaryOutcome run_adversary(int k, OnlineColorer<AttachedSegment>& algorithm,
                               const Region& region);

// Rectangle with left side on v1, disjoint from every segment of f1, whose
// right-side vertical line pierces exactly the same set as v1 and whose top
// lies strictly below every crossing of a pierced segment with any vertical
// line in its x-span (it is half the minimum clearance).
Region choose_subregion(std::span<const AttachedSegment> f1, const VerticalLine& v1,
                        const Region& region);

// The closing segment: foot strictly between v1 and the witness of
// f2_outcome, crossing every pierced segment of f2_outcome and the line v1,
// disjoint from everything else. It reaches left at most to left_limit and
// stays strictly below height_cap. Raises InvariantFailureError when no
// slope window exists.
AttachedSegment final_segment(const VerticalLine& v1, const AdversaryOutcome& f2_outcome,
                              const Region& region, const Rational& left_limit,
                              const Rational& height_cap);

// Brute force over all triples: no three pairwise intersecting segments.
bool clique_at_most_two(std::span<const AttachedSegment> family);

}  // namespace stripcolor
