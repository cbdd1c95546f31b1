#include <doctest.h>

#include <cmath>
#include <memory>

#include "stripcolor/adversary.hpp"
#include "stripcolor/engine.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/strip_coloring.hpp"

using namespace stripcolor;

namespace {

bool att(const AttachedSegment& a, const AttachedSegment& b) { return intersects_attached(a, b); }

Region unit_region() { return Region{Rational(0), Rational(1), Rational(1)}; }

void check_outcome(const AdversaryOutcome& o, int k) {
    CHECK(static_cast<int>(o.family.size()) == (1 << k) - 1);
    CHECK(o.transcript.proper);
    CHECK(clique_at_most_two(o.family));
    // claim invariants, re-derived from the raw geometry
    auto pierced = pierced_indices(std::span<const AttachedSegment>(o.family), o.witness);
    CHECK(pierced == o.pierced);
    for (std::size_t a = 0; a < pierced.size(); ++a)
        for (std::size_t b = a + 1; b < pierced.size(); ++b)
            CHECK_FALSE(intersects_attached(o.family[pierced[a]], o.family[pierced[b]]));
    for (int i : pierced) CHECK(o.witness.x < o.family[i].foot.x);
    CHECK(static_cast<int>(o.colors_on_pierced.size()) >= k);
}

}  // namespace

TEST_CASE("strength one is a single negative-slope segment") {
    FirstFitColorer<AttachedSegment> ff(att);
    AdversaryOutcome o = run_adversary(1, ff, unit_region());
    CHECK(o.family.size() == 1);
    CHECK(o.family[0].apex.x < o.family[0].foot.x);
    CHECK(o.colors_on_pierced.size() == 1);
    check_outcome(o, 1);
}

TEST_CASE("strength three against first fit") {
    FirstFitColorer<AttachedSegment> ff(att);
    AdversaryOutcome o = run_adversary(3, ff, unit_region());
    CHECK(o.family.size() == 7);
    check_outcome(o, 3);
}

TEST_CASE("strength five against several algorithms") {
    SUBCASE("triple-coloring adapter") {
        AttachedTripleColorer colorer;
        check_outcome(run_adversary(5, colorer, unit_region()), 5);
    }
    SUBCASE("seeded random proper colorer") {
        for (std::uint64_t seed : {1ULL, 7ULL, 41ULL}) {
            RandomProperColorer<AttachedSegment> colorer(att, seed);
            check_outcome(run_adversary(5, colorer, unit_region()), 5);
        }
    }
    SUBCASE("least used variant") {
        LeastUsedColorer<AttachedSegment> colorer(att);
        check_outcome(run_adversary(5, colorer, unit_region()), 5);
    }
}

TEST_CASE("counts are exact for every strength") {
    for (int k = 1; k <= 4; ++k) {
        FirstFitColorer<AttachedSegment> ff(att);
        AdversaryOutcome o = run_adversary(k, ff, unit_region());
        CHECK(static_cast<int>(o.family.size()) == (1 << k) - 1);
        check_outcome(o, k);
    }
}

TEST_CASE("subregion choice matches the clearance computation") {
    // one segment from foot (2,0) to apex (-2,4), witness at x = 0
    std::vector<AttachedSegment> f1{
        AttachedSegment{Point{Rational(2), Rational(0)}, Point{Rational(-2), Rational(4)}}};
    Region region{Rational(-3), Rational(3), Rational(5)};
    Region sub = choose_subregion(f1, VerticalLine{Rational(0)}, region);
    CHECK(sub.x_left == Rational(0));
    CHECK(sub.x_right == Rational(1));       // halfway to the foot
    CHECK(sub.y_top == Rational(1, 2));      // half the height of the segment at x = 1
    // posts
    CHECK(pierced_indices(f1, VerticalLine{sub.x_right}) == std::vector<int>{0});
    CHECK(sub.x_right - sub.x_left < region.x_right - region.x_left);

    CHECK_THROWS_AS(choose_subregion(f1, VerticalLine{Rational(10)}, region), PreconditionError);
}

TEST_CASE("closing segment crosses the second pierced set and nothing else") {
    FirstFitColorer<AttachedSegment> ff(att);
    AdversaryOutcome o = run_adversary(2, ff, unit_region());
    // the closing segment is the last one presented
    const AttachedSegment& d = o.family.back();
    const AttachedSegment& first = o.family.front();
    const AttachedSegment& second = o.family[1];
    CHECK(d.apex.x < d.foot.x);
    CHECK(intersects_attached(d, second));
    CHECK_FALSE(intersects_attached(d, first));
}

namespace {

// Always opens a fresh color; trivially proper.
struct SpendthriftColorer final : OnlineColorer<AttachedSegment> {
    Color color(const AttachedSegment&, std::span<const AttachedSegment>,
                std::span<const Color> earlier) override {
        int mx = 0;
        for (const Color& c : earlier) mx = std::max(mx, c.a);
        return Color::simple(mx + 1);
    }
};

// Keys its preferred color on the apex height's magnitude and scans upward
// past conflicts; proper, deterministic, and geometry-sensitive.
struct HeightBucketColorer final : OnlineColorer<AttachedSegment> {
    Color color(const AttachedSegment& next, std::span<const AttachedSegment> earlier,
                std::span<const Color> colors) override {
        double h = std::max(1e-300, next.apex.y.to_double());
        int bucket =
            1 + std::max(0, std::min(400, static_cast<int>(std::floor(-std::log2(h)))));
        std::vector<bool> blocked(100000, false);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            if (intersects_attached(earlier[i], next)) blocked[colors[i].a] = true;
        int id = bucket;
        while (blocked[id]) ++id;
        return Color::simple(id);
    }
};

}  // namespace

TEST_CASE("geometry-sensitive opponents are beaten too") {
    for (int k = 2; k <= 5; ++k) {
        SpendthriftColorer fresh;
        check_outcome(run_adversary(k, fresh, unit_region()), k);
        HeightBucketColorer buckets;
        check_outcome(run_adversary(k, buckets, unit_region()), k);
    }
}

TEST_CASE("regions with offsets and odd proportions work the same") {
    for (const Region& region : {Region{Rational(-7), Rational(-3), Rational(1, 3)},
                                 Region{Rational(100), Rational(101), Rational(50)},
                                 Region{Rational(0), Rational(1000), Rational(1, 100)}}) {
        FirstFitColorer<AttachedSegment> ff(att);
        AdversaryOutcome o = run_adversary(4, ff, region);
        check_outcome(o, 4);
        for (const AttachedSegment& s : o.family) {
            CHECK(region.x_left < s.apex.x);
            CHECK(s.foot.x < region.x_right);
            CHECK(s.apex.y < region.y_top);
        }
    }
}

TEST_CASE("improper opponents abort the game") {
    struct Cheater final : OnlineColorer<AttachedSegment> {
        Color color(const AttachedSegment&, std::span<const AttachedSegment>,
                    std::span<const Color>) override {
            return Color::simple(1);
        }
    } cheater;
    CHECK_THROWS_AS(run_adversary(2, cheater, unit_region()), ImproperColoringError);
}

TEST_CASE("degenerate inputs are rejected") {
    FirstFitColorer<AttachedSegment> ff(att);
    CHECK_THROWS_AS(run_adversary(0, ff, unit_region()), PreconditionError);
    CHECK_THROWS_AS(run_adversary(1, ff, Region{Rational(1), Rational(0), Rational(1)}),
                    PreconditionError);
}
