#include "stripcolor/curves.hpp"

#include <algorithm>
#include <map>

#include "stripcolor/errors.hpp"

namespace stripcolor {

namespace {

const Rational kZero(0);
const Rational kOne(1);

// ---- per-curve evaluation ----

std::size_t segment_index_at(const PolylineCurve& c, const Rational& y) {
    // first segment [pts[i], pts[i+1]] with pts[i].y <= y <= pts[i+1].y
    std::size_t lo = 0, hi = c.pts.size() - 1;
    while (lo + 1 < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (c.pts[mid].y < y || c.pts[mid].y == y)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// ---- pairwise contacts ----

struct PairContacts {
    std::vector<Rational> events;  // heights where the curves meet (interval endpoints for overlaps)
    bool any = false;
};

PairContacts pair_contacts(const PolylineCurve& a, const PolylineCurve& b) {
    PairContacts out;
    std::vector<Rational> breaks;
    for (const Point& p : a.pts) breaks.push_back(p.y);
    for (const Point& p : b.pts) breaks.push_back(p.y);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    Rational prev_diff = curve_x_at(a, breaks[0]) - curve_x_at(b, breaks[0]);
    if (prev_diff.is_zero()) {
        out.events.push_back(breaks[0]);
        out.any = true;
    }
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const Rational& y1 = breaks[i];
        const Rational& y2 = breaks[i + 1];
        Rational d1 = prev_diff;
        Rational d2 = curve_x_at(a, y2) - curve_x_at(b, y2);
        prev_diff = d2;
        if (d2.is_zero()) {
            out.events.push_back(y2);
            out.any = true;
        }
        if (d1.sign() * d2.sign() < 0) {
            // single interior root of the affine difference
            Rational y = y1 + (y2 - y1) * d1 / (d1 - d2);
            out.events.push_back(y);
            out.any = true;
        }
    }
    std::sort(out.events.begin(), out.events.end());
    out.events.erase(std::unique(out.events.begin(), out.events.end()), out.events.end());
    return out;
}

std::vector<Rational> merge_heights(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Midpoints of the open gaps that a sorted list of heights cuts out of
// (lo, hi), including the two outer gaps.
std::vector<Rational> gap_midpoints(const std::vector<Rational>& cuts, const Rational& lo,
                                    const Rational& hi) {
    std::vector<Rational> out;
    Rational prev = lo;
    for (const Rational& c : cuts) {
        if (c < lo || hi < c) continue;
        if (prev < c) out.push_back(midpoint(prev, c));
        prev = c;
    }
    if (prev < hi) out.push_back(midpoint(prev, hi));
    return out;
}

bool segment_contacts_curve(const Point& p, const Point& q, const PolylineCurve& c,
                            const Rational& ylo, const Rational& yhi) {
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Point& a = c.pts[i];
        const Point& b = c.pts[i + 1];
        if (b.y < ylo || yhi < a.y) continue;
        // clip the piece to [ylo, yhi]
        Point ca = a, cb = b;
        if (ca.y < ylo) ca = Point{a.x + (b.x - a.x) * (ylo - a.y) / (b.y - a.y), ylo};
        if (yhi < cb.y) cb = Point{a.x + (b.x - a.x) * (yhi - a.y) / (b.y - a.y), yhi};
        if (segments_intersect(p, q, ca, cb)) return true;
    }
    return false;
}

}  // namespace

Rational curve_x_at(const PolylineCurve& c, const Rational& y) {
    if (c.pts.size() < 2) throw InvalidInputError("curve needs at least two vertices");
    if (y < c.pts.front().y || c.pts.back().y < y)
        throw InvalidInputError("height outside the curve's range");
    std::size_t i = segment_index_at(c, y);
    const Point& a = c.pts[i];
    const Point& b = c.pts[i + 1];
    if (y == a.y) return a.x;
    if (y == b.y) return b.x;
    return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

void validate(const PolylineCurve& c) {
    if (c.pts.size() < 2) throw InvalidInputError("curve needs at least two vertices");
    if (!(c.pts.front().y == kZero) || !(c.pts.back().y == kOne))
        throw InvalidInputError("curve must span the strip");
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i)
        if (!(c.pts[i].y < c.pts[i + 1].y))
            throw InvalidInputError("curve vertices must strictly increase in y");
}

std::optional<Rational> FreeRegion::left_at(const Rational& y) const {
    std::optional<Rational> bound;
    for (const PolylineCurve& c : left_walls) {
        Rational x = curve_x_at(c, y);
        if (!bound || *bound < x) bound = x;
    }
    return bound;
}

std::optional<Rational> FreeRegion::right_at(const Rational& y) const {
    std::optional<Rational> bound;
    for (const PolylineCurve& c : right_walls) {
        Rational x = curve_x_at(c, y);
        if (!bound || x < *bound) bound = x;
    }
    return bound;
}

FreeRegion compute_free_region(const CurveSystem& sys, std::span<const int> up,
                               std::span<const int> down) {
    FreeRegion r;
    for (int i : down) r.left_walls.push_back(sys.curves.at(static_cast<std::size_t>(i)));
    for (int i : up) r.right_walls.push_back(sys.curves.at(static_cast<std::size_t>(i)));
    std::vector<Rational> ev{kZero, kOne};
    std::vector<const PolylineCurve*> walls;
    for (const auto& c : r.left_walls) walls.push_back(&c);
    for (const auto& c : r.right_walls) walls.push_back(&c);
    for (const PolylineCurve* c : walls)
        for (const Point& p : c->pts) ev.push_back(p.y);
    for (std::size_t i = 0; i < walls.size(); ++i)
        for (std::size_t j = i + 1; j < walls.size(); ++j) {
            PairContacts pc = pair_contacts(*walls[i], *walls[j]);
            ev.insert(ev.end(), pc.events.begin(), pc.events.end());
        }
    r.events = merge_heights(std::move(ev));
    // the corridor must be open at every height
    for (std::size_t i = 0; i + 1 < r.events.size(); ++i) {
        Rational y = midpoint(r.events[i], r.events[i + 1]);
        auto l = r.left_at(y);
        auto rr = r.right_at(y);
        if (l && rr && !(*l < *rr))
            throw InvariantFailureError("free region is empty at some height");
    }
    return r;
}

bool curves_touch(const PolylineCurve& a, const PolylineCurve& b) {
    return pair_contacts(a, b).any;
}

std::vector<Rational> contact_heights(const CurveSystem& sys) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < sys.curves.size(); ++i)
        for (std::size_t j = i + 1; j < sys.curves.size(); ++j) {
            PairContacts pc = pair_contacts(sys.curves[i], sys.curves[j]);
            out.insert(out.end(), pc.events.begin(), pc.events.end());
        }
    return merge_heights(std::move(out));
}

std::optional<std::vector<int>> order_at(const CurveSystem& sys, const Rational& y) {
    const int n = static_cast<int>(sys.curves.size());
    std::vector<std::pair<Rational, int>> xs;
    xs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs.emplace_back(curve_x_at(sys.curves[i], y), i);
    std::sort(xs.begin(), xs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (xs[i].first == xs[i + 1].first) return std::nullopt;
    std::vector<int> order;
    order.reserve(xs.size());
    for (const auto& [x, i] : xs) order.push_back(i);
    return order;
}

bool verify_representation(const CurveSystem& sys) {
    const int n = static_cast<int>(sys.curves.size());
    if (n != sys.poset.size()) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (curves_touch(sys.curves[i], sys.curves[j]) != sys.poset.incomparable(i, j))
                return false;
    return true;
}

bool verify_star(const CurveSystem& sys) {
    if (sys.curves.empty()) return true;
    std::vector<LinearExtension> extensions = linear_extensions(sys.poset);
    std::vector<Rational> cuts = contact_heights(sys);
    std::vector<std::vector<int>> realized;
    for (const Rational& y : gap_midpoints(cuts, kZero, kOne)) {
        auto ord = order_at(sys, y);
        if (!ord) continue;
        realized.push_back(std::move(*ord));
    }
    std::sort(realized.begin(), realized.end());
    realized.erase(std::unique(realized.begin(), realized.end()), realized.end());
    // every line's order must itself extend the poset
    for (const auto& ord : realized)
        if (!is_linear_extension(sys.poset, ord)) return false;
    for (const auto& ext : extensions)
        if (!std::binary_search(realized.begin(), realized.end(), ext)) return false;
    return true;
}

namespace {

// Anchor strictly inside the corridor at height y: `leftmost` picks a point
// left of every strictly-inside curve, otherwise right of all of them.
Rational corridor_anchor(const CurveSystem& sys, const FreeRegion& region, const Rational& y,
                         bool leftmost) {
    auto l = region.left_at(y);
    auto r = region.right_at(y);
    std::optional<Rational> inner_min, inner_max;
    for (const PolylineCurve& c : sys.curves) {
        Rational x = curve_x_at(c, y);
        if (l && !(*l < x)) continue;
        if (r && !(x < *r)) continue;
        if (!inner_min || x < *inner_min) inner_min = x;
        if (!inner_max || *inner_max < x) inner_max = x;
    }
    std::optional<Rational> lo = l, hi = r;
    if (leftmost) {
        if (inner_min && (!hi || *inner_min < *hi)) hi = inner_min;
    } else {
        if (inner_max && (!lo || *lo < *inner_max)) lo = inner_max;
    }
    if (lo && hi) return midpoint(*lo, *hi);
    if (lo) return *lo + kOne;
    if (hi) return *hi - kOne;
    return kZero;
}

}  // namespace

CurveSystem insert_element(const CurveSystem& sys, const std::vector<int>& up,
                           const std::vector<int>& down) {
    CurveSystem out;
    out.poset = sys.poset.extended(up, down);  // validates consistency
    out.curves = sys.curves;

    if (sys.curves.empty()) {
        out.curves.push_back(PolylineCurve{{Point{kZero, kZero}, Point{kZero, kOne}}});
        out.lines = {Rational(1, 2)};
        return out;
    }

    FreeRegion region = compute_free_region(sys, up, down);
    std::vector<Rational> old_contacts = contact_heights(sys);

    // One steep crossing segment per stored realization line, inside a tube
    // narrow enough that the old curves keep their order throughout it.
    struct Tube {
        Rational bottom, top;
        Point p, q;  // p on bottom (rightmost), q on top (leftmost)
    };
    std::vector<Tube> tubes;
    for (std::size_t li = 0; li < sys.lines.size(); ++li) {
        const Rational& line = sys.lines[li];
        Rational h = min(line, kOne - line);
        if (li > 0) h = min(h, line - sys.lines[li - 1]);
        if (li + 1 < sys.lines.size()) h = min(h, sys.lines[li + 1] - line);
        for (const Rational& c : old_contacts) h = min(h, abs(c - line));
        h = h * Rational(1, 2);
        if (!(kZero < h)) throw InvariantFailureError("degenerate tube around a stored line");

        for (int attempt = 0;; ++attempt) {
            if (attempt > 64) throw InvariantFailureError("no valid tube segment found");
            Rational b = line - h;
            Rational t = line + h;
            Point p{corridor_anchor(sys, region, b, /*leftmost=*/false), b};
            Point q{corridor_anchor(sys, region, t, /*leftmost=*/true), t};
            bool ok = true;
            for (const PolylineCurve& wall : region.left_walls)
                if (segment_contacts_curve(p, q, wall, b, t)) ok = false;
            for (const PolylineCurve& wall : region.right_walls)
                if (segment_contacts_curve(p, q, wall, b, t)) ok = false;
            if (ok) {
                tubes.push_back(Tube{b, t, p, q});
                break;
            }
            h = h * Rational(1, 2);
        }
    }

    // Connect consecutive tube segments through the corridor, walking event
    // heights so every straight piece lives in a convex slice of the region.
    PolylineCurve nc;
    // `from` by value: pushing into nc.pts may reallocate under the caller
    auto walk_corridor = [&](Point from, Point to) {
        for (const Rational& e : region.events) {
            if (!(from.y < e) || !(e < to.y)) continue;
            auto l = region.left_at(e);
            auto r = region.right_at(e);
            Rational x;
            if (l && r)
                x = midpoint(*l, *r);
            else if (l)
                x = *l + kOne;
            else if (r)
                x = *r - kOne;
            else
                x = kZero;
            nc.pts.push_back(Point{x, e});
        }
        nc.pts.push_back(to);
    };

    // bottom attachment: middle of the leftmost gap between corridor wall and
    // the feet inside it, so no existing endpoint is reused
    {
        auto l = region.left_at(kZero);
        auto r = region.right_at(kZero);
        std::optional<Rational> nearest;
        for (const PolylineCurve& c : sys.curves) {
            Rational x = c.pts.front().x;
            if (l && !(*l < x)) continue;
            if (r && !(x < *r)) continue;
            if (!nearest || x < *nearest) nearest = x;
        }
        if (!nearest) nearest = r;
        Rational x0;
        if (l && nearest)
            x0 = midpoint(*l, *nearest);
        else if (nearest)
            x0 = *nearest - kOne;
        else if (l)
            x0 = *l + kOne;
        else
            x0 = kZero;
        nc.pts.push_back(Point{x0, kZero});
    }
    for (const Tube& tube : tubes) {
        walk_corridor(nc.pts.back(), tube.p);
        nc.pts.push_back(tube.q);
    }
    // top attachment, symmetric to the bottom one
    {
        auto l = region.left_at(kOne);
        auto r = region.right_at(kOne);
        std::optional<Rational> nearest;
        for (const PolylineCurve& c : sys.curves) {
            Rational x = c.pts.back().x;
            if (l && !(*l < x)) continue;
            if (r && !(x < *r)) continue;
            if (!nearest || *nearest < x) nearest = x;
        }
        if (!nearest) nearest = l;
        Rational x1;
        if (r && nearest)
            x1 = midpoint(*nearest, *r);
        else if (nearest)
            x1 = *nearest + kOne;
        else if (r)
            x1 = *r - kOne;
        else
            x1 = kZero;
        walk_corridor(nc.pts.back(), Point{x1, kOne});
    }

    // drop collinear interior vertices
    PolylineCurve simplified;
    for (const Point& p : nc.pts) {
        while (simplified.pts.size() >= 2) {
            const Point& a = simplified.pts[simplified.pts.size() - 2];
            const Point& b = simplified.pts.back();
            if (orient(a, b, p) == 0)
                simplified.pts.pop_back();
            else
                break;
        }
        simplified.pts.push_back(p);
    }
    validate(simplified);
    out.curves.push_back(std::move(simplified));
    const PolylineCurve& added = out.curves.back();
    const int x_index = static_cast<int>(out.curves.size()) - 1;

    // the new curve must meet exactly the curves of incomparable elements
    for (int i = 0; i < x_index; ++i)
        if (curves_touch(out.curves[i], added) != out.poset.incomparable(i, x_index))
            throw InvariantFailureError("inserted curve has a wrong crossing pattern");

    // Realization lines for the grown system: the old lines (the new curve
    // threads through each tube, so they still read off valid orders) plus
    // fresh lines between consecutive crossings of the new curve inside each
    // tube, which realize every admissible position of the new element. Keep
    // one line per distinct realized order.
    std::vector<Rational> new_contacts;
    for (int i = 0; i < x_index; ++i) {
        PairContacts pc = pair_contacts(out.curves[i], added);
        new_contacts.insert(new_contacts.end(), pc.events.begin(), pc.events.end());
    }
    new_contacts = merge_heights(std::move(new_contacts));

    std::vector<Rational> candidates = sys.lines;
    for (const Tube& tube : tubes) {
        std::vector<Rational> inside;
        for (const Rational& y : new_contacts)
            if (tube.bottom < y && y < tube.top) inside.push_back(y);
        auto mids = gap_midpoints(inside, tube.bottom, tube.top);
        candidates.insert(candidates.end(), mids.begin(), mids.end());
    }

    std::map<std::vector<int>, Rational> per_order;
    for (const Rational& y : candidates) {
        auto ord = order_at(out, y);
        if (!ord) continue;
        per_order.emplace(std::move(*ord), y);
    }
    for (auto& [ord, y] : per_order) out.lines.push_back(y);
    std::sort(out.lines.begin(), out.lines.end());
    out.lines.erase(std::unique(out.lines.begin(), out.lines.end()), out.lines.end());
    return out;
}

}  // namespace stripcolor
