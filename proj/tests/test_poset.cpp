#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/generators.hpp"
#include "stripcolor/poset.hpp"

using namespace stripcolor;
namespace fx = stripcolor::fixtures;

namespace {

// Independent extension oracle: filter all permutations.
std::size_t count_extensions_by_filter(const Poset& p) {
    std::vector<int> perm(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) perm[i] = i;
    std::size_t count = 0;
    do {
        if (is_linear_extension(p, perm)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

}  // namespace

TEST_CASE("posets enforce their invariants on construction") {
    std::vector<std::pair<int, int>> cyc{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(Poset::from_pairs(3, cyc), InvalidInputError);
    std::vector<std::pair<int, int>> open{{0, 1}, {1, 2}};
    CHECK_THROWS_AS(Poset::from_pairs(3, open, /*close_transitively=*/false), InvalidInputError);
    Poset p = Poset::from_pairs(3, open);
    CHECK(p.less(0, 2));
}

TEST_CASE("from_family recovers the left-of order") {
    std::vector<StripObject> crossing{fx::seg(0, 20), fx::seg(10, 10), fx::seg(20, 0)};
    Poset antichain = from_family(crossing);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK_FALSE(antichain.less(i, j));

    std::vector<StripObject> slabs{fx::slab(0, 1), fx::slab(3, 1), fx::slab(6, 1)};
    Poset chain = from_family(slabs);
    CHECK(chain == Poset::chain(3));

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto objects = gen_segments(GenOptions{10, seed, 4});
        CHECK_NOTHROW(from_family(objects));  // transitivity asserted inside
    }
}

TEST_CASE("linear extension enumeration and counting") {
    CHECK(linear_extensions(Poset::antichain(3)).size() == 6);
    CHECK(linear_extensions(Poset::chain(4)).size() == 1);
    CHECK(linear_extensions(fx::two_plus_two()).size() == 6);
    CHECK(count_extensions_by_filter(fx::two_plus_two()) == 6);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Poset p = random_poset(7, seed, 35);
        auto all = linear_extensions(p);
        CHECK(all.size() == count_extensions_by_filter(p));
        CHECK(all.size() == count_linear_extensions(p));
        for (const auto& ext : all) CHECK(is_linear_extension(p, ext));
    }
    CHECK_THROWS_AS(linear_extensions(Poset::antichain(9)), ResourceLimitError);
}

TEST_CASE("cocomparability graphs") {
    CHECK(cocomparability_graph(Poset::chain(5)).edge_count() == 0);
    CHECK(cocomparability_graph(Poset::antichain(5)) == SimpleGraph::complete(5));
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto objects = gen_quasi_convex(GenOptions{9, seed, 3});
        SimpleGraph expect(9);
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j)
                if (intersects(objects[i], objects[j])) expect.add_edge(i, j);
        CHECK(cocomparability_graph(from_family(objects)) == expect);
    }
}

TEST_CASE("height") {
    CHECK(height(Poset::antichain(4)) == 1);
    CHECK(height(Poset::chain(5)) == 5);
    CHECK(height(fx::height3_fixture()) == 3);
    CHECK(height(fx::standard_example_3()) == 2);
}

TEST_CASE("height-2 posets get convex representations") {
    SUBCASE("antichain becomes pairwise-crossing segments") {
        auto objs = height2_convex_representation(Poset::antichain(3));
        for (const auto& o : objs) CHECK(o.polygon.size() == 2);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) CHECK(intersects(objs[i], objs[j]));
    }
    SUBCASE("two-chain separates left to right") {
        Poset p = Poset::chain(2);
        auto objs = height2_convex_representation(p);
        CHECK(left_of(objs[0], objs[1]) == LeftOf::a_left);
    }
    SUBCASE("standard example round-trips") {
        Poset s3 = fx::standard_example_3();
        auto objs = height2_convex_representation(s3);
        CHECK(from_family(objs) == s3);
    }
    SUBCASE("random height-2 posets round-trip under identity indexing") {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            Poset p = random_height2_poset(10, seed);
            auto objs = height2_convex_representation(p);
            for (const auto& o : objs) {
                CHECK(o.kind == ObjectKind::convex);
                CHECK_NOTHROW(validate(o));
            }
            CHECK(from_family(objs) == p);
        }
    }
    SUBCASE("every maximal element's segment is exposed on the left envelope") {
        Poset p = fx::standard_example_3();
        auto objs = height2_convex_representation(p);
        std::vector<int> tops = p.maximal_elements();
        const int m = static_cast<int>(tops.size());
        for (int i = 0; i < m; ++i) {
            Rational eta(i + 1, m + 1);
            Rational xi = objs[tops[i]].base.x_at(eta);
            for (int j = 0; j < m; ++j)
                if (j != i) CHECK(xi < objs[tops[j]].base.x_at(eta));
        }
    }
    SUBCASE("all two-level relations on four labeled elements round-trip") {
        // every bipartite relation bottom x top over 2+2 elements
        for (unsigned mask = 0; mask < 16; ++mask) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if ((mask >> (2 * i + j)) & 1) pairs.emplace_back(i, 2 + j);
            Poset p = Poset::from_pairs(4, pairs, false);
            auto objs = height2_convex_representation(p);
            CHECK(from_family(objs) == p);
        }
    }
    SUBCASE("height 3 is rejected") {
        CHECK_THROWS_AS(height2_convex_representation(Poset::chain(3)), PreconditionError);
    }
}

TEST_CASE("extended posets validate their up and down sets") {
    Poset p = Poset::chain(3);
    CHECK_THROWS_AS(p.extended(std::vector<int>{0}, std::vector<int>{}), PreconditionError);
    CHECK_THROWS_AS(p.extended(std::vector<int>{1, 2}, std::vector<int>{1}), PreconditionError);
    Poset q = p.extended(std::vector<int>{2}, std::vector<int>{0});
    CHECK(q.less(0, 3));
    CHECK(q.less(3, 2));
    CHECK(q.incomparable(1, 3));
}
