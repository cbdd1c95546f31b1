#include "stripcolor/geometry.hpp"

#include <algorithm>

#include "stripcolor/errors.hpp"

namespace stripcolor {

namespace {

const Rational kZero(0);
const Rational kOne(1);

bool between(const Rational& lo, const Rational& v, const Rational& hi) {
    return !(v < min(lo, hi)) && !(max(lo, hi) < v);
}

// Bounding boxes as a cheap reject before the exact tests.
struct BBox {
    Rational xmin, xmax, ymin, ymax;
};

BBox bbox_of(std::span<const Point> pts) {
    BBox b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (const Point& p : pts.subspan(1)) {
        if (p.x < b.xmin) b.xmin = p.x;
        if (b.xmax < p.x) b.xmax = p.x;
        if (p.y < b.ymin) b.ymin = p.y;
        if (b.ymax < p.y) b.ymax = p.y;
    }
    return b;
}

bool bbox_overlap(const BBox& a, const BBox& b) {
    return !(a.xmax < b.xmin) && !(b.xmax < a.xmin) && !(a.ymax < b.ymin) && !(b.ymax < a.ymin);
}

void check_polygon_shape(std::span<const Point> polygon) {
    if (polygon.size() < 2) throw InvalidInputError("polygon needs at least two vertices");
}

}  // namespace

int orient(const Point& a, const Point& b, const Point& c) {
    Rational cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return cross.sign();
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    return orient(a, b, p) == 0 && between(a.x, p.x, b.x) && between(a.y, p.y, b.y);
}

bool segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
    int d1 = orient(q1, q2, p1);
    int d2 = orient(q1, q2, p2);
    int d3 = orient(p1, p2, q1);
    int d4 = orient(p1, p2, q2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    if (d1 == 0 && point_on_segment(p1, q1, q2)) return true;
    if (d2 == 0 && point_on_segment(p2, q1, q2)) return true;
    if (d3 == 0 && point_on_segment(q1, p1, p2)) return true;
    if (d4 == 0 && point_on_segment(q2, p1, p2)) return true;
    return false;
}

bool point_in_polygon(const Point& p, std::span<const Point> polygon) {
    check_polygon_shape(polygon);
    const std::size_t n = polygon.size();
    if (n == 2) return point_on_segment(p, polygon[0], polygon[1]);
    for (std::size_t i = 0; i < n; ++i) {
        if (point_on_segment(p, polygon[i], polygon[(i + 1) % n])) return true;
    }
    // Ray cast to +infinity with the half-open vertex rule.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        bool a_above = p.y < a.y;
        bool b_above = p.y < b.y;
        if (a_above == b_above) continue;
        // x coordinate of the edge at height p.y; denominator is nonzero here.
        Rational t = (p.y - a.y) / (b.y - a.y);
        Rational x = a.x + t * (b.x - a.x);
        if (p.x < x) inside = !inside;
    }
    return inside;
}

bool polygon_is_simple(std::span<const Point> polygon) {
    check_polygon_shape(polygon);
    const std::size_t n = polygon.size();
    if (n == 2) return !(polygon[0] == polygon[1]);
    for (std::size_t i = 0; i < n; ++i) {
        if (polygon[i] == polygon[(i + 1) % n]) return false;  // zero-length edge
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = polygon[i];
        const Point& b = polygon[(i + 1) % n];
        // adjacent edges may only share the common vertex
        const Point& c = polygon[(i + 2) % n];
        if (point_on_segment(c, a, b) || point_on_segment(a, b, c)) return false;
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
            if (segments_intersect(a, b, polygon[j], polygon[(j + 1) % n])) return false;
        }
    }
    return true;
}

bool polygon_is_convex(std::span<const Point> polygon) {
    check_polygon_shape(polygon);
    const std::size_t n = polygon.size();
    if (n == 2) return true;
    int dir = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int o = orient(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]);
        if (o == 0) continue;
        if (dir == 0)
            dir = o;
        else if (o != dir)
            return false;
    }
    return true;
}

bool segment_in_polygon(const Point& a, const Point& b, std::span<const Point> polygon) {
    check_polygon_shape(polygon);
    if (polygon.size() == 2) {
        return point_on_segment(a, polygon[0], polygon[1]) &&
               point_on_segment(b, polygon[0], polygon[1]);
    }
    if (!point_in_polygon(a, polygon) || !point_in_polygon(b, polygon)) return false;
    if (a == b) return true;

    // Split [a, b] at every contact with the boundary and test the midpoint of
    // each piece. Contacts are collected as exact parameters along the segment.
    std::vector<Rational> params{kZero, kOne};
    const Rational dx = b.x - a.x;
    const Rational dy = b.y - a.y;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& c = polygon[i];
        const Point& d = polygon[(i + 1) % n];
        Rational ex = d.x - c.x;
        Rational ey = d.y - c.y;
        Rational den = dx * ey - dy * ex;
        if (!den.is_zero()) {
            // a + t(b-a) == c + s(d-c)
            Rational t = ((c.x - a.x) * ey - (c.y - a.y) * ex) / den;
            Rational s = ((c.x - a.x) * dy - (c.y - a.y) * dx) / den;
            if (!(t < kZero) && !(kOne < t) && !(s < kZero) && !(kOne < s)) params.push_back(t);
        } else if (orient(a, b, c) == 0) {
            // collinear edge: project its endpoints onto [a, b]
            auto param_of = [&](const Point& p) {
                return dx.is_zero() ? (p.y - a.y) / dy : (p.x - a.x) / dx;
            };
            for (const Point* p : {&c, &d}) {
                Rational t = param_of(*p);
                if (!(t < kZero) && !(kOne < t)) params.push_back(t);
            }
        }
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        Rational t = midpoint(params[i], params[i + 1]);
        Point m{a.x + t * dx, a.y + t * dy};
        if (!point_in_polygon(m, polygon)) return false;
    }
    return true;
}

void validate(const StripObject& object) {
    const auto& poly = object.polygon;
    if (poly.size() < 2) throw InvalidInputError("strip object polygon needs at least 2 vertices");
    if (!polygon_is_simple(poly)) throw InvalidInputError("strip object polygon is not simple");
    BBox b = bbox_of(poly);
    if (b.ymin < kZero || kOne < b.ymax)
        throw InvalidInputError("strip object leaves the strip");
    if (!(b.ymin == kZero) || !(b.ymax == kOne))
        throw InvalidInputError("strip object must touch both lines");
    Point top{object.base.x_top, kOne};
    Point bottom{object.base.x_bottom, kZero};
    if (poly.size() == 2) {
        bool match = (poly[0] == bottom && poly[1] == top) || (poly[0] == top && poly[1] == bottom);
        if (!match) throw InvalidInputError("bare segment must coincide with its base");
    } else if (!segment_in_polygon(bottom, top, poly)) {
        throw InvalidInputError("base segment not contained in the object");
    }
    if (object.kind == ObjectKind::convex && !polygon_is_convex(poly))
        throw InvalidInputError("object declared convex has a non-convex polygon");
}

bool intersects(const StripObject& a, const StripObject& b) {
    if (a.polygon.size() < 2 || b.polygon.size() < 2)
        throw InvalidInputError("strip object polygon needs at least 2 vertices");
    if (!bbox_overlap(bbox_of(a.polygon), bbox_of(b.polygon))) return false;
    const auto& pa = a.polygon;
    const auto& pb = b.polygon;
    const std::size_t na = pa.size() == 2 ? 1 : pa.size();
    const std::size_t nb = pb.size() == 2 ? 1 : pb.size();
    for (std::size_t i = 0; i < na; ++i) {
        const Point& a1 = pa[i];
        const Point& a2 = pa[(i + 1) % pa.size()];
        for (std::size_t j = 0; j < nb; ++j) {
            if (segments_intersect(a1, a2, pb[j], pb[(j + 1) % pb.size()])) return true;
        }
    }
    // No boundary contact: one may still contain the other.
    return point_in_polygon(pa[0], pb) || point_in_polygon(pb[0], pa);
}

LeftOf left_of(const StripObject& a, const StripObject& b) {
    if (intersects(a, b)) return LeftOf::incomparable;
    // For disjoint quasi-convex objects each lies strictly on one side of the
    // other's base line, so comparing base attachments decides the component.
    bool top_lt = a.base.x_top < b.base.x_top;
    bool bottom_lt = a.base.x_bottom < b.base.x_bottom;
    if (top_lt != bottom_lt)
        throw InvariantFailureError("disjoint objects with crossing base segments");
    return top_lt ? LeftOf::a_left : LeftOf::b_left;
}

void validate(const AttachedSegment& s) {
    if (!s.foot.y.is_zero()) throw InvalidInputError("attached segment foot must lie on y = 0");
    if (!(kZero < s.apex.y)) throw InvalidInputError("attached segment apex must lie above the line");
}

bool intersects_attached(const AttachedSegment& a, const AttachedSegment& b) {
    return segments_intersect(a.foot, a.apex, b.foot, b.apex);
}

std::vector<int> pierced_indices(std::span<const AttachedSegment> family, const VerticalLine& v) {
    std::vector<int> out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const AttachedSegment& s = family[i];
        if (between(s.foot.x, v.x, s.apex.x)) out.push_back(static_cast<int>(i));
    }
    return out;
}

std::vector<AttachedSegment> pierced_by(std::span<const AttachedSegment> family, const VerticalLine& v) {
    std::vector<AttachedSegment> out;
    for (int i : pierced_indices(family, v)) out.push_back(family[i]);
    return out;
}

unsigned segment_type(const BaseSegment& s, const std::array<Point, 3>& pts) {
    for (int i = 0; i < 3; ++i) {
        if (!(kZero < pts[i].y) || !(pts[i].y < kOne))
            throw InvalidInputError("type point must lie in the open strip");
        for (int j = i + 1; j < 3; ++j)
            if (pts[i].y == pts[j].y) throw InvalidInputError("type points must have distinct heights");
    }
    unsigned mask = 0;
    for (int i = 0; i < 3; ++i) {
        Rational lx = s.x_at(pts[i].y);
        if (pts[i].x == lx) throw InvalidInputError("type point lies on the segment");
        if (pts[i].x < lx) mask |= (1u << i);
    }
    return mask;
}

}  // namespace stripcolor
