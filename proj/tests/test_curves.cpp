#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "stripcolor/curves.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/generators.hpp"

using namespace stripcolor;
namespace fx = stripcolor::fixtures;

namespace {

// Inserts the elements of `target` in the given order, checking the posts
// after every single insertion.
CurveSystem build_incrementally(const Poset& target, const std::vector<int>& order,
                                bool check_star) {
    CurveSystem sys;
    std::vector<int> inserted;
    for (int e : order) {
        std::vector<int> up, down;
        for (std::size_t j = 0; j < inserted.size(); ++j) {
            if (target.less(e, inserted[j])) up.push_back(static_cast<int>(j));
            if (target.less(inserted[j], e)) down.push_back(static_cast<int>(j));
        }
        CurveSystem next = insert_element(sys, up, down);
        // persistence: previously inserted curves are bitwise unchanged
        for (std::size_t j = 0; j < sys.curves.size(); ++j)
            REQUIRE(next.curves[j] == sys.curves[j]);
        for (const PolylineCurve& c : next.curves) validate(c);
        REQUIRE(verify_representation(next));
        for (std::size_t li = 0; li < next.lines.size(); ++li) {
            REQUIRE(Rational(0) < next.lines[li]);
            REQUIRE(next.lines[li] < Rational(1));
            if (li > 0) REQUIRE(next.lines[li - 1] < next.lines[li]);
        }
        if (check_star) {
            REQUIRE(verify_star(next));
            // the stored lines alone already realize every extension
            std::set<std::vector<int>> on_stored;
            for (const Rational& y : next.lines) {
                auto ord = order_at(next, y);
                if (ord) on_stored.insert(*ord);
            }
            for (const auto& ext : linear_extensions(next.poset))
                REQUIRE(on_stored.count(ext) == 1);
        }
        sys = std::move(next);
        inserted.push_back(e);
    }
    return sys;
}

std::vector<int> identity_order(int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[i] = i;
    return order;
}

}  // namespace

TEST_CASE("the first curve is a vertical segment") {
    CurveSystem sys = insert_element(CurveSystem{}, {}, {});
    CHECK(sys.curves.size() == 1);
    CHECK(sys.curves[0].pts.size() == 2);
    CHECK(sys.curves[0].pts[0].x == sys.curves[0].pts[1].x);
    CHECK(sys.lines == std::vector<Rational>{Rational(1, 2)});
    CHECK(verify_star(sys));
}

TEST_CASE("an element above everything goes strictly right, crossing nothing") {
    CurveSystem sys;
    sys = insert_element(sys, {}, {});
    sys = insert_element(sys, {}, {0});
    sys = insert_element(sys, {}, {0, 1});
    CHECK(verify_representation(sys));
    for (int i = 0; i < 2; ++i) CHECK_FALSE(curves_touch(sys.curves[i], sys.curves[2]));
    for (const Rational& y : {Rational(1, 7), Rational(1, 2), Rational(6, 7)})
        CHECK(curve_x_at(sys.curves[1], y) < curve_x_at(sys.curves[2], y));
    CHECK(verify_star(sys));
}

TEST_CASE("two crossing curves realize both orders") {
    CurveSystem sys;
    sys = insert_element(sys, {}, {});
    sys = insert_element(sys, {}, {});
    CHECK(curves_touch(sys.curves[0], sys.curves[1]));
    CHECK(verify_star(sys));  // both orders appear below and above the crossing
}

TEST_CASE("a four-antichain realizes all 24 orders") {
    CurveSystem sys = build_incrementally(Poset::antichain(4), identity_order(4), true);
    std::set<std::vector<int>> realized;
    std::vector<Rational> cuts = contact_heights(sys);
    std::vector<Rational> samples;
    Rational prev(0);
    for (const Rational& c : cuts) {
        samples.push_back(midpoint(prev, c));
        prev = c;
    }
    samples.push_back(midpoint(prev, Rational(1)));
    for (const Rational& y : samples) {
        auto ord = order_at(sys, y);
        if (ord) realized.insert(*ord);
    }
    CHECK(realized.size() == 24);
}

TEST_CASE("a six-antichain keeps exactly one line per order") {
    CurveSystem sys;
    for (int i = 0; i < 6; ++i) sys = insert_element(sys, {}, {});
    CHECK(sys.lines.size() == 720);
    CHECK(verify_representation(sys));
}

TEST_CASE("every extension is realized on a stored line") {
    CurveSystem sys = build_incrementally(Poset::antichain(3), identity_order(3), true);
    auto extensions = linear_extensions(sys.poset);
    CHECK(sys.lines.size() == extensions.size());
    std::set<std::vector<int>> on_stored;
    for (const Rational& y : sys.lines) {
        auto ord = order_at(sys, y);
        REQUIRE(ord.has_value());
        on_stored.insert(*ord);
    }
    for (const auto& ext : extensions) CHECK(on_stored.count(ext) == 1);
}

TEST_CASE("free regions") {
    CurveSystem sys;
    SUBCASE("empty system leaves the whole strip") {
        FreeRegion r = compute_free_region(sys, {}, {});
        CHECK_FALSE(r.left_at(Rational(1, 2)).has_value());
        CHECK_FALSE(r.right_at(Rational(1, 2)).has_value());
    }
    SUBCASE("one vertical curve bounds the region of a later element") {
        sys = insert_element(sys, {}, {});
        std::vector<int> down{0};
        FreeRegion r = compute_free_region(sys, {}, down);
        REQUIRE(r.left_at(Rational(1, 3)).has_value());
        CHECK(*r.left_at(Rational(1, 3)) == curve_x_at(sys.curves[0], Rational(1, 3)));
        CHECK_FALSE(r.right_at(Rational(1, 3)).has_value());
    }
    SUBCASE("between two chain elements the region is the gap") {
        CurveSystem chain = build_incrementally(Poset::chain(3), identity_order(3), true);
        std::vector<int> up{1, 2}, down{0};
        FreeRegion r = compute_free_region(chain, up, down);
        for (const Rational& y :
             {Rational(1, 9), Rational(1, 3), Rational(1, 2), Rational(7, 9)}) {
            REQUIRE(r.left_at(y).has_value());
            REQUIRE(r.right_at(y).has_value());
            CHECK(*r.left_at(y) == curve_x_at(chain.curves[0], y));
            CHECK(*r.right_at(y) == curve_x_at(chain.curves[1], y));
            CHECK(*r.left_at(y) < *r.right_at(y));
        }
    }
}

TEST_CASE("incremental builds stay correct for small random posets") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 4 + static_cast<int>(seed % 3);
        Poset target = random_poset(n, seed, 40);
        Rng rng(seed * 77);
        std::vector<int> order = identity_order(n);
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[rng.below(static_cast<std::uint64_t>(i + 1))]);
        build_incrementally(target, order, true);
    }
}

TEST_CASE("star verification respects the extension cap") {
    CurveSystem sys;
    for (int i = 0; i < 9; ++i) sys = insert_element(sys, {}, identity_order(i));  // a chain
    CHECK(verify_representation(sys));
    CHECK_THROWS_AS(verify_star(sys), ResourceLimitError);
}

TEST_CASE("inconsistent insertions are rejected") {
    CurveSystem sys;
    sys = insert_element(sys, {}, {});
    sys = insert_element(sys, {0}, {});  // 1 < 0
    CHECK_THROWS_AS(insert_element(sys, {1}, {0}), PreconditionError);  // up not closed
    CHECK_THROWS_AS(insert_element(sys, {0}, {0}), PreconditionError);
}

TEST_CASE("a height-3 fixture slice gets a fully verified representation") {
    // Induced subposet of the twelve-element fixture on eight elements: two
    // incomparable pairs plus three middles. The full fixture works too but
    // needs a realization line per linear extension (107964 of them), which
    // is far beyond desk scale; see the README for the long-running variant.
    Poset q = fx::height3_fixture();
    std::vector<int> keep{0, 1, 2, 3, 4, 5, 9, 10};
    std::vector<std::pair<int, int>> sub;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
            if (q.less(keep[a], keep[b])) sub.emplace_back(static_cast<int>(a), static_cast<int>(b));
    Poset slice = Poset::from_pairs(8, sub, /*close_transitively=*/false);
    CHECK(height(slice) == 3);
    std::vector<int> order{0, 3, 7, 1, 4, 6, 2, 5};
    CurveSystem sys = build_incrementally(slice, order, false);
    CHECK(verify_representation(sys));
    CHECK(verify_star(sys));
}
