#include "stripcolor/generators.hpp"

#include <algorithm>

#include "stripcolor/engine.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/oracle.hpp"

namespace stripcolor {

std::uint64_t Rng::splitmix() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::next() { return splitmix(); }

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw PreconditionError("empty range");
    // rejection sampling keeps the draw unbiased and platform independent
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

long Rng::int_in(long lo, long hi) {
    if (hi < lo) throw PreconditionError("empty integer range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

namespace {

// Base attachments drawn in a sliding window: object i attaches near slot
// K * i with jitter proportional to the clique cap, so only nearby objects can
// cross. The exact clique number is still verified by rejection.
struct BaseLayout {
    std::vector<long> tops;
    std::vector<long> bottoms;
};

BaseLayout draw_bases(Rng& rng, int n, int omega_cap, int attempt) {
    const long unit = 8;
    long spread = omega_cap > 0 ? unit * std::max(1, omega_cap - 1) : unit * std::max(1, n);
    // every third failure narrows the windows a step; redraws come in between
    int level = std::min(attempt / 3, 7);
    spread = std::max(long{1}, spread * (8 - level) / 8);
    BaseLayout out;
    for (int i = 0; i < n; ++i) {
        long slot = unit * static_cast<long>(i);
        out.tops.push_back(slot + rng.int_in(0, spread));
        out.bottoms.push_back(slot + rng.int_in(0, spread));
    }
    // distinct attachment points on each line keep the index computations
    // free of coordinate ties
    auto has_duplicates = [](const std::vector<long>& v) {
        std::vector<long> sorted(v);
        std::sort(sorted.begin(), sorted.end());
        return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    };
    if (has_duplicates(out.tops) || has_duplicates(out.bottoms)) out.tops.clear();
    return out;
}

int family_clique(const std::vector<StripObject>& objects) {
    SimpleGraph g(static_cast<int>(objects.size()));
    for (std::size_t i = 0; i < objects.size(); ++i)
        for (std::size_t j = i + 1; j < objects.size(); ++j)
            if (intersects(objects[i], objects[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return oracle::clique_number(g);
}

template <class MakeObject>
std::vector<StripObject> generate_family(const GenOptions& opt, const MakeObject& make) {
    if (opt.n < 0) throw PreconditionError("n must be non-negative");
    if (opt.n == 0) return {};
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rng rng(opt.seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
        BaseLayout layout = draw_bases(rng, opt.n, opt.omega_cap, attempt);
        if (layout.tops.empty()) continue;
        std::vector<StripObject> objects;
        for (int i = 0; i < opt.n; ++i)
            objects.push_back(make(rng, layout.tops[i], layout.bottoms[i], attempt));
        bool ok = true;
        for (const StripObject& o : objects) validate(o);
        if (opt.omega_cap > 0 && family_clique(objects) > opt.omega_cap) ok = false;
        if (ok) return objects;
    }
    throw GenerationFailureError("could not satisfy the clique cap");
}

}  // namespace

std::vector<StripObject> gen_segments(const GenOptions& opt) {
    return generate_family(opt, [](Rng&, long top, long bottom, int) {
        return StripObject::bare_segment(Rational(top), Rational(bottom));
    });
}

std::vector<StripObject> gen_convex(const GenOptions& opt) {
    return generate_family(opt, [](Rng& rng, long top, long bottom, int) {
        const long margin = 3;
        StripObject o;
        o.kind = ObjectKind::convex;
        o.base = BaseSegment{Rational(top), Rational(bottom)};
        Rational tl(top - rng.int_in(0, margin)), tr(top + rng.int_in(0, margin));
        Rational bl(bottom - rng.int_in(0, margin)), br(bottom + rng.int_in(0, margin));
        // convex hull of the two horizontal edges plus optional flank points
        std::vector<Point> pts{{bl, Rational(0)}, {br, Rational(0)}, {tr, Rational(1)}, {tl, Rational(1)}};
        if (rng.chance(60)) {
            Rational y(rng.int_in(1, 3), 4);
            Rational x = o.base.x_at(y) + Rational(rng.int_in(1, margin) + margin);
            pts.push_back(Point{x, y});
        }
        // hull by orientation walk (small point count)
        std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            return a.x < b.x || (a.x == b.x && a.y < b.y);
        });
        auto half = [&](bool upper) {
            std::vector<Point> chain;
            for (std::size_t k = 0; k < pts.size(); ++k) {
                const Point& p = pts[upper ? pts.size() - 1 - k : k];
                while (chain.size() >= 2 &&
                       orient(chain[chain.size() - 2], chain.back(), p) <= 0)
                    chain.pop_back();
                chain.push_back(p);
            }
            chain.pop_back();
            return chain;
        };
        std::vector<Point> hull = half(false);
        std::vector<Point> up = half(true);
        hull.insert(hull.end(), up.begin(), up.end());
        o.polygon = hull;
        return o;
    });
}

std::vector<StripObject> gen_quasi_convex(const GenOptions& opt) {
    return generate_family(opt, [](Rng& rng, long top, long bottom, int) {
        const long margin = 3;
        StripObject o;
        o.kind = ObjectKind::quasi_convex;
        o.base = BaseSegment{Rational(top), Rational(bottom)};
        // right flank descending, then left flank ascending; offsets keep the
        // chains on their own side of the base so the polygon stays simple
        std::vector<Rational> heights{Rational(1), Rational(3, 4), Rational(1, 2), Rational(1, 4),
                                      Rational(0)};
        std::vector<Point> right, left;
        for (const Rational& y : heights) {
            Rational bx = o.base.x_at(y);
            right.push_back(Point{bx + Rational(rng.int_in(1, 2 * margin), 4), y});
            left.push_back(Point{bx - Rational(rng.int_in(1, 2 * margin), 4), y});
        }
        o.polygon.clear();
        for (const Point& p : right) o.polygon.push_back(p);              // top to bottom
        for (auto it = left.rbegin(); it != left.rend(); ++it) o.polygon.push_back(*it);
        return o;
    });
}

std::vector<AttachedSegment> gen_attached(const GenOptions& opt) {
    if (opt.n < 0) throw PreconditionError("n must be non-negative");
    if (opt.n == 0) return {};
    for (int attempt = 0; attempt < 24; ++attempt) {
        Rng rng(opt.seed * 2000003ULL + static_cast<std::uint64_t>(attempt));
        std::vector<AttachedSegment> segs;
        long reach = opt.omega_cap > 0 ? 6L * opt.omega_cap : 6L * opt.n;
        reach = std::max(long{2}, reach * (8 - std::min(attempt / 3, 7)) / 8);
        for (int i = 0; i < opt.n; ++i) {
            long foot = 8L * i + rng.int_in(0, 7);
            long dx = rng.int_in(1, reach);
            AttachedSegment s;
            s.foot = Point{Rational(foot), Rational(0)};
            s.apex = Point{Rational(foot + (rng.chance(50) ? dx : -dx)), Rational(rng.int_in(1, 8))};
            validate(s);
            segs.push_back(s);
        }
        if (opt.omega_cap > 0) {
            SimpleGraph g(opt.n);
            for (int i = 0; i < opt.n; ++i)
                for (int j = i + 1; j < opt.n; ++j)
                    if (intersects_attached(segs[i], segs[j])) g.add_edge(i, j);
            if (oracle::clique_number(g) > opt.omega_cap) continue;
        }
        return segs;
    }
    throw GenerationFailureError("could not satisfy the clique cap");
}

Poset random_poset(int n, std::uint64_t seed, int density_percent) {
    Rng rng(seed * 3000017ULL);
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.chance(density_percent)) pairs.emplace_back(order[i], order[j]);
    return Poset::from_pairs(n, pairs, /*close_transitively=*/true);
}

Poset random_height2_poset(int n, std::uint64_t seed) {
    Rng rng(seed * 5000011ULL);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> role(static_cast<std::size_t>(n));  // 0 bottom, 1 top, 2 isolated
    for (int i = 0; i < n; ++i)
        role[i] = rng.chance(15) ? 2 : (rng.chance(50) ? 1 : 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (role[i] == 0 && role[j] == 1 && rng.chance(40)) pairs.emplace_back(i, j);
    return Poset::from_pairs(n, pairs, /*close_transitively=*/false);
}

}  // namespace stripcolor
