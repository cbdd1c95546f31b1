#include "stripcolor/adversary.hpp"

#include <algorithm>
#include <optional>

#include "stripcolor/errors.hpp"

namespace stripcolor {

namespace {

const Rational kZero(0);

Rational seg_min_x(const AttachedSegment& s) { return min(s.foot.x, s.apex.x); }
Rational seg_max_x(const AttachedSegment& s) { return max(s.foot.x, s.apex.x); }

// Height of the segment's supporting line at x; callers keep x inside the
// segment's x-range.
Rational height_at(const AttachedSegment& s, const Rational& x) {
    return s.apex.y * (s.foot.x - x) / (s.foot.x - s.apex.x);
}

void check_region(const Region& r) {
    if (!(r.x_left < r.x_right) || !(kZero < r.y_top))
        throw PreconditionError("degenerate adversary region");
}

bool strictly_inside(const AttachedSegment& s, const Region& r) {
    for (const Point* p : {&s.foot, &s.apex}) {
        if (!(r.x_left < p->x) || !(p->x < r.x_right)) return false;
        if (r.y_top < p->y || p->y == r.y_top) return false;
    }
    return true;
}

// Obstruction-free gap hugging `x` from the left: distance from x to the
// nearest of `floor_x`, apexes of `pierced` and right ends of segments lying
// wholly left of x.
Rational left_gap(std::span<const AttachedSegment> family, std::span<const int> pierced,
                  const Rational& x, const Rational& floor_x) {
    Rational barrier = floor_x;
    for (int i : pierced) barrier = max(barrier, family[i].apex.x);
    for (const AttachedSegment& s : family) {
        Rational mx = seg_max_x(s);
        if (mx < x) barrier = max(barrier, mx);
    }
    if (!(barrier < x)) throw InvariantFailureError("witness line has no clearance on its left");
    return x - barrier;
}

struct LevelResult {
    int begin = 0;
    int end = 0;  // family slice [begin, end)
    VerticalLine witness;
    std::vector<int> pierced;  // global indices
};

struct Driver {
    Game<AttachedSegment>& game;
    int total_strength;

    const std::vector<AttachedSegment>& family() const { return game.transcript().objects; }

    void present(const AttachedSegment& s) {
        validate(s);
        game.present(s);
        if (!game.transcript().proper)
            throw ImproperColoringError("algorithm produced an improper coloring");
    }

    std::vector<Color> distinct_colors(std::span<const int> indices) const {
        std::vector<Color> out;
        for (int i : indices) out.push_back(game.transcript().colors[i]);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Exact re-derivation of the pierced set within a slice, with the level
    // invariants checked from scratch.
    void verify_level(const LevelResult& r, int strength, const Region& region) const {
        const auto& fam = family();
        if (r.end - r.begin != (1 << strength) - 1)
            throw InvariantFailureError("wrong segment count for strategy level");
        std::vector<int> pierced;
        for (int i = r.begin; i < r.end; ++i) {
            if (!strictly_inside(fam[i], region))
                throw InvariantFailureError("segment escapes its region");
            if (!(fam[i].apex.x < fam[i].foot.x))
                throw InvariantFailureError("segment must have negative slope");
            if (!(seg_min_x(fam[i]) < r.witness.x) || !(r.witness.x < seg_max_x(fam[i]))) continue;
            pierced.push_back(i);
        }
        // boundary contact with the witness line is forbidden by construction
        for (int i = r.begin; i < r.end; ++i)
            if (seg_min_x(fam[i]) == r.witness.x || seg_max_x(fam[i]) == r.witness.x)
                throw InvariantFailureError("witness line touches a segment endpoint");
        if (pierced != r.pierced) throw InvariantFailureError("pierced set mismatch");
        for (std::size_t a = 0; a < pierced.size(); ++a)
            for (std::size_t b = a + 1; b < pierced.size(); ++b)
                if (intersects_attached(fam[pierced[a]], fam[pierced[b]]))
                    throw InvariantFailureError("pierced segments are not pairwise disjoint");
        for (int i : pierced)
            if (!(r.witness.x < fam[i].foot.x))
                throw InvariantFailureError("pierced segment attached left of the witness");
        if (static_cast<int>(distinct_colors(pierced).size()) < strength)
            throw InvariantFailureError("too few colors on the pierced set");
    }

    LevelResult run_level(int strength, const Region& region) {
        check_region(region);
        const Rational width = region.x_right - region.x_left;
        LevelResult result;
        result.begin = static_cast<int>(family().size());

        if (strength == 1) {
            AttachedSegment s;
            s.apex = Point{region.x_left + width * Rational(1, 8), region.y_top * Rational(3, 4)};
            s.foot = Point{region.x_left + width * Rational(7, 8), kZero};
            present(s);
            result.end = static_cast<int>(family().size());
            result.witness = VerticalLine{region.x_left + width * Rational(5, 8)};
            result.pierced = {result.begin};
            verify_level(result, strength, region);
            return result;
        }

        // First sub-family in a slightly smaller region.
        Region r1{region.x_left + width * Rational(1, 32), region.x_right - width * Rational(1, 32),
                  region.y_top * Rational(1, 2)};
        LevelResult first = run_level(strength - 1, r1);
        std::span<const AttachedSegment> f1(family().data() + first.begin,
                                            static_cast<std::size_t>(first.end - first.begin));

        // Corridor under the pierced segments, right of the first witness.
        Region corridor = choose_subregion(f1, first.witness, region);
        const Rational clearance = corridor.y_top * Rational(2);  // full clearance above the corridor
        // Height budget for the nested run: scaled down so the closing
        // segment always finds a slope window (checked exactly below).
        Region r2 = corridor;
        {
            Rational w2 = r2.x_right - r2.x_left;
            Rational span_bound = (first.witness.x - region.x_left) + w2;
            Rational shrink = w2 / (w2 + span_bound);
            for (int i = 1; i < strength; ++i) shrink = shrink * Rational(1, 8);
            r2.y_top = r2.y_top * shrink;
        }
        LevelResult second = run_level(strength - 1, r2);

        // Closing segment.
        AdversaryOutcome sub;
        sub.family.assign(family().begin() + second.begin, family().begin() + second.end);
        sub.witness = second.witness;
        for (int i : second.pierced) sub.pierced.push_back(i - second.begin);
        Rational gap1 = left_gap(std::span<const AttachedSegment>(family()), first.pierced,
                                 first.witness.x, region.x_left);
        Rational left_limit = first.witness.x - gap1 * Rational(1, 2);
        AttachedSegment closing = final_segment(first.witness, sub, r2, left_limit, clearance);
        int closing_index = static_cast<int>(family().size());
        present(closing);
        result.end = static_cast<int>(family().size());

        std::vector<int> joint = first.pierced;
        joint.insert(joint.end(), second.pierced.begin(), second.pierced.end());
        std::sort(joint.begin(), joint.end());
        if (static_cast<int>(distinct_colors(joint).size()) >= strength) {
            result.witness = second.witness;
            result.pierced = joint;
        } else {
            result.witness = first.witness;
            result.pierced = first.pierced;
            result.pierced.push_back(closing_index);
            std::sort(result.pierced.begin(), result.pierced.end());
        }
        verify_level(result, strength, region);
        return result;
    }
};

}  // namespace

Region choose_subregion(std::span<const AttachedSegment> f1, const VerticalLine& v1,
                        const Region& region) {
    std::vector<int> pierced = pierced_indices(f1, v1);
    if (pierced.empty()) throw PreconditionError("witness line pierces nothing");
    // Right side: half way to the nearest constraint so the same set stays
    // pierced and nothing of f1 enters the rectangle.
    std::optional<Rational> nearest;
    auto shrink_to = [&](const Rational& x) {
        if (!nearest || x < *nearest) nearest = x;
    };
    std::vector<bool> in_pierced(f1.size(), false);
    for (int i : pierced) {
        in_pierced[i] = true;
        shrink_to(f1[i].foot.x);
    }
    for (std::size_t i = 0; i < f1.size(); ++i) {
        if (in_pierced[i]) continue;
        if (v1.x < seg_min_x(f1[i])) shrink_to(seg_min_x(f1[i]));
    }
    shrink_to(region.x_right);
    Rational right = midpoint(v1.x, *nearest);
    // Top: half the minimum height of a pierced segment over the x-span.
    std::optional<Rational> min_height;
    for (int i : pierced) {
        Rational h = height_at(f1[i], right);
        if (!min_height || h < *min_height) min_height = h;
    }
    Rational top = *min_height * Rational(1, 2);
    if (region.y_top < top) top = region.y_top * Rational(1, 2);
    Region out{v1.x, right, top};
    // posts, checked exactly
    std::vector<int> again = pierced_indices(f1, VerticalLine{right});
    if (again != pierced)
        throw InvariantFailureError("subregion right side pierces a different set");
    for (const AttachedSegment& s : f1) {
        bool x_overlap = !(seg_max_x(s) < out.x_left) && !(out.x_right < seg_min_x(s));
        if (!x_overlap) continue;
        bool is_pierced_seg = false;
        for (int i : pierced)
            if (&f1[i] == &s) is_pierced_seg = true;
        Rational clearance_left = height_at(s, max(seg_min_x(s), out.x_left));
        Rational clearance_right = height_at(s, min(seg_max_x(s), out.x_right));
        if (!is_pierced_seg || !(out.y_top < min(clearance_left, clearance_right)))
            throw InvariantFailureError("subregion not disjoint from the first family");
    }
    return out;
}

AttachedSegment final_segment(const VerticalLine& v1, const AdversaryOutcome& f2_outcome,
                              const Region& region, const Rational& left_limit,
                              const Rational& height_cap) {
    if (!(left_limit < v1.x)) throw PreconditionError("left limit must lie left of v1");
    const auto& f2 = f2_outcome.family;
    const VerticalLine v2 = f2_outcome.witness;
    if (!(v1.x < v2.x)) throw PreconditionError("second witness must lie right of v1");

    // Foot position: halve the obstruction-free corridor left of v2.
    Rational barrier = v1.x;
    std::vector<bool> in_pierced(f2.size(), false);
    for (int i : f2_outcome.pierced) {
        in_pierced[i] = true;
        barrier = max(barrier, f2[i].apex.x);
    }
    for (std::size_t i = 0; i < f2.size(); ++i) {
        if (in_pierced[i]) continue;
        Rational mx = seg_max_x(f2[i]);
        if (mx < v2.x) barrier = max(barrier, mx);
    }
    if (!(barrier < v2.x)) throw InvariantFailureError("no corridor left of the second witness");
    const Rational foot_x = midpoint(barrier, v2.x);
    const Rational apex_x = left_limit;

    // Slope window: steep enough to rise over every apex it must pass or
    // cross, flat enough to stay below the clearance height over the span.
    std::optional<Rational> slope_min;
    auto need_above = [&](const Point& apex) {
        if (!(apex.x < foot_x)) throw InvariantFailureError("apex blocks the closing segment");
        Rational s = apex.y / (foot_x - apex.x);
        if (!slope_min || *slope_min < s) slope_min = s;
    };
    for (int i : f2_outcome.pierced) need_above(f2[i].apex);
    for (std::size_t i = 0; i < f2.size(); ++i) {
        if (in_pierced[i]) continue;
        if (seg_min_x(f2[i]) < foot_x && seg_max_x(f2[i]) < v2.x) need_above(f2[i].apex);
    }
    if (!slope_min) throw PreconditionError("second outcome pierces nothing");
    Rational slope_max = height_cap / (foot_x - apex_x);
    if (!(*slope_min < slope_max))
        throw InvariantFailureError("no slope window for the closing segment");
    Rational slope = midpoint(*slope_min, slope_max);

    AttachedSegment d;
    d.foot = Point{foot_x, kZero};
    d.apex = Point{apex_x, slope * (foot_x - apex_x)};

    // posts, checked exactly
    for (int i : f2_outcome.pierced)
        if (!intersects_attached(d, f2[i]))
            throw InvariantFailureError("closing segment misses a pierced segment");
    for (std::size_t i = 0; i < f2.size(); ++i)
        if (!in_pierced[i] && intersects_attached(d, f2[i]))
            throw InvariantFailureError("closing segment hits a non-pierced segment");
    if (!(d.apex.x < v1.x) || !(v1.x < d.foot.x))
        throw InvariantFailureError("closing segment does not cross the first witness");
    (void)region;
    return d;
}

bool clique_at_most_two(std::span<const AttachedSegment> family) {
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b) {
            if (!intersects_attached(family[a], family[b])) continue;
            for (std::size_t c = b + 1; c < family.size(); ++c)
                if (intersects_attached(family[a], family[c]) &&
                    intersects_attached(family[b], family[c]))
                    return false;
        }
    return true;
}

AdversaryOutcome run_adversary(int k, OnlineColorer<AttachedSegment>& algorithm,
                               const Region& region) {
    if (k < 1) throw PreconditionError("adversary strength must be at least 1");
    check_region(region);
    Game<AttachedSegment> game(
        algorithm,
        [](const AttachedSegment& a, const AttachedSegment& b) { return intersects_attached(a, b); },
        /*omega_cap=*/(1 << k) - 1);
    Driver driver{game, k};
    LevelResult top = driver.run_level(k, region);

    AdversaryOutcome out;
    out.witness = top.witness;
    out.pierced = top.pierced;
    out.colors_on_pierced = driver.distinct_colors(top.pierced);
    out.transcript = game.take();
    out.family = out.transcript.objects;
    // whole-family cross-checks
    std::vector<int> pierced = pierced_indices(std::span<const AttachedSegment>(out.family),
                                               out.witness);
    if (pierced != out.pierced)
        throw InvariantFailureError("witness line pierced set mismatch over the full family");
    if (static_cast<int>(out.colors_on_pierced.size()) < k)
        throw InvariantFailureError("adversary failed to force enough colors");
    return out;
}

}  // namespace stripcolor
