// On-line construction of y-monotone polyline curves spanning the strip that
// represent an incrementally grown poset: two curves share a point exactly
// when their elements are incomparable, and at all times every linear
// extension of the poset is read off some horizontal line from left to right.
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "stripcolor/poset.hpp"
#include "stripcolor/rational.hpp"

namespace stripcolor {

// Vertices with strictly increasing y from y = 0 to y = 1.
struct PolylineCurve {
    std::vector<Point> pts;
    friend bool operator==(const PolylineCurve&, const PolylineCurve&) = default;
};

Rational curve_x_at(const PolylineCurve& curve, const Rational& y);
void validate(const PolylineCurve& curve);

struct CurveSystem {
    Poset poset;
    std::vector<PolylineCurve> curves;  // one per element, insertion order
    std::vector<Rational> lines;        // realization lines, sorted, in (0, 1)
};

// Open corridor strictly right of a set of curves and strictly left of
// another; between consecutive event heights both walls are straight.
struct FreeRegion {
    std::vector<PolylineCurve> left_walls;   // curves of the down-set
    std::vector<PolylineCurve> right_walls;  // curves of the up-set
    std::vector<Rational> events;            // includes 0 and 1

    std::optional<Rational> left_at(const Rational& y) const;   // nullopt = unbounded
    std::optional<Rational> right_at(const Rational& y) const;  // nullopt = unbounded
};

FreeRegion compute_free_region(const CurveSystem& sys, std::span<const int> up,
                               std::span<const int> down);

// Inserts a new element above everything in `down` and below everything in
// `up` (indices into the current system; sets must be closed). Existing
// curves are not modified.
CurveSystem insert_element(const CurveSystem& sys, const std::vector<int>& up,
                           const std::vector<int>& down);

// Exact contact between two curves (closed point sets).
bool curves_touch(const PolylineCurve& a, const PolylineCurve& b);

// All heights where some pair of curves meets; order is constant between
// consecutive entries.
std::vector<Rational> contact_heights(const CurveSystem& sys);

// Left-to-right element order on the horizontal line at height y, or nullopt
// when two curves tie there.
std::optional<std::vector<int>> order_at(const CurveSystem& sys, const Rational& y);

// Crossing pattern equals incomparability.
bool verify_representation(const CurveSystem& sys);

// True iff every linear extension of the poset appears as the left-to-right
// order on some horizontal line; resource-limited by the extension cap.
bool verify_star(const CurveSystem& sys);

}  // namespace stripcolor
