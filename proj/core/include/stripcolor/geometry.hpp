// Exact geometric kernel for objects spanned between two horizontal lines.
//
// The strip is the region between the lines y = 0 (bottom) and y = 1 (top).
// Every strip object is a closed set touching both lines; all predicates are
// exact over rational coordinates and treat objects as closed point sets, so
// boundary contact counts as intersection.
#pragma once

#include <array>
#include <span>
#include <vector>

#include "stripcolor/rational.hpp"

namespace stripcolor {

struct Strip {
    Rational y_bottom{0};
    Rational y_top{1};
};

// A straight segment with one endpoint on each line, identified by the two
// attachment x-coordinates.
struct BaseSegment {
    Rational x_top;     // attachment on y = 1
    Rational x_bottom;  // attachment on y = 0

    // x-coordinate of the segment's supporting line at height y.
    Rational x_at(const Rational& y) const { return x_bottom + (x_top - x_bottom) * y; }
};

enum class ObjectKind { convex, quasi_convex };

// A quasi-convex set: a simple polygon spanning the strip together with a
// designated base segment contained in it. Two vertices make a bare segment,
// which must coincide with its base.
struct StripObject {
    std::vector<Point> polygon;
    BaseSegment base;
    ObjectKind kind = ObjectKind::quasi_convex;

    static StripObject bare_segment(const Rational& x_top, const Rational& x_bottom) {
        StripObject s;
        s.polygon = {Point{x_bottom, Rational(0)}, Point{x_top, Rational(1)}};
        s.base = BaseSegment{x_top, x_bottom};
        s.kind = ObjectKind::convex;
        return s;
    }
};

// A segment attached to the horizontal line y = 0, lying in the closed upper
// halfplane.
struct AttachedSegment {
    Point foot;  // foot.y == 0
    Point apex;  // apex.y > 0
};

struct VerticalLine {
    Rational x;
};

// ---- low-level exact predicates ----

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

bool point_on_segment(const Point& p, const Point& a, const Point& b);

// Closed segment intersection test.
bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2);

// Closed point-in-polygon test; a polygon with two vertices is a segment.
bool point_in_polygon(const Point& p, std::span<const Point> polygon);

bool polygon_is_simple(std::span<const Point> polygon);
bool polygon_is_convex(std::span<const Point> polygon);

// Whole closed segment [a, b] contained in the closed polygon.
bool segment_in_polygon(const Point& a, const Point& b, std::span<const Point> polygon);

// ---- strip object operations ----

// Full structural validation; throws InvalidInputError with a reason.
void validate(const StripObject& object);

// Closed polygons sharing at least one point.
bool intersects(const StripObject& a, const StripObject& b);

enum class LeftOf { a_left, b_left, incomparable };

// Strict left-of relation: a_left iff the objects are disjoint and a lies in
// the left component of the strip minus b.
LeftOf left_of(const StripObject& a, const StripObject& b);

// ---- attached segment operations ----

void validate(const AttachedSegment& segment);
bool intersects_attached(const AttachedSegment& a, const AttachedSegment& b);

// Indices of the segments whose closed point set meets the vertical line.
std::vector<int> pierced_indices(std::span<const AttachedSegment> family, const VerticalLine& v);
std::vector<AttachedSegment> pierced_by(std::span<const AttachedSegment> family, const VerticalLine& v);

// ---- segment types against a labeled point triple ----

// Bitmask over {0, 1, 2}: bit i set iff pts[i] is strictly left of the line
// through s at its height. Points must have pairwise distinct y-coordinates
// inside the open strip and must not lie on the segment.
unsigned segment_type(const BaseSegment& s, const std::array<Point, 3>& pts);

}  // namespace stripcolor
