#include <doctest.h>

#include "fixtures.hpp"
#include "stripcolor/caps.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/generators.hpp"
#include "stripcolor/oracle.hpp"
#include "stripcolor/poset.hpp"

using namespace stripcolor;
namespace fx = stripcolor::fixtures;

namespace {

// Independent subset-enumeration clique oracle for small graphs.
int clique_by_subsets(const SimpleGraph& g) {
    const int n = g.size();
    int best = n > 0 ? 1 : 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!((mask >> i) & 1)) continue;
            for (int j = i + 1; j < n && clique; ++j)
                if (((mask >> j) & 1) && !g.adjacent(i, j)) clique = false;
        }
        if (clique) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

}  // namespace

TEST_CASE("clique number") {
    CHECK(oracle::clique_number(SimpleGraph::complete(5)) == 5);
    CHECK(oracle::clique_number(SimpleGraph(6)) == 1);
    CHECK(oracle::clique_number(SimpleGraph(0)) == 0);
    CHECK(oracle::clique_number(cycle(5)) == 2);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto objects = gen_segments(GenOptions{12, seed, 5});
        SimpleGraph g(12);
        for (int i = 0; i < 12; ++i)
            for (int j = i + 1; j < 12; ++j)
                if (intersects(objects[i], objects[j])) g.add_edge(i, j);
        CHECK(oracle::clique_number(g) == clique_by_subsets(g));
    }
}

TEST_CASE("chromatic number") {
    CHECK(oracle::chromatic_number(cycle(5)) == 3);
    CHECK(oracle::chromatic_number(complete_bipartite(3, 4)) == 2);
    CHECK(oracle::chromatic_number(SimpleGraph(4)) == 1);
    // intersection graphs of strip families are perfect
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto objects = gen_quasi_convex(GenOptions{10, seed, 4});
        SimpleGraph g = cocomparability_graph(from_family(objects));
        CHECK(oracle::chromatic_number(g) == oracle::clique_number(g));
    }
}

TEST_CASE("clique never exceeds chromatic") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Poset p = random_poset(9, seed, 30);
        SimpleGraph g = cocomparability_graph(p);
        CHECK(oracle::clique_number(g) <= oracle::chromatic_number(g));
    }
}

TEST_CASE("induced complete bipartite detection") {
    CHECK(oracle::has_induced_ktt(complete_bipartite(3, 3), 3));
    CHECK_FALSE(oracle::has_induced_ktt(SimpleGraph::complete(6), 3));
    CHECK_FALSE(oracle::has_induced_ktt(complete_bipartite(3, 2), 3));
    // an induced copy inside a larger graph
    SimpleGraph g = complete_bipartite(3, 3);
    g.add_vertex();
    g.add_edge(6, 0);
    CHECK(oracle::has_induced_ktt(g, 3));
    CHECK(oracle::has_induced_ktt(complete_bipartite(3, 3), 2));
    CHECK_THROWS_AS(oracle::has_induced_ktt(SimpleGraph(3), 0), InvalidInputError);
}

TEST_CASE("longest sequence matches tiny cases") {
    BaseSegment v{Rational(10), Rational(0)};
    CHECK(oracle::longest_sequence(v, {}, oracle::SequenceMode::alpha) == 1);
    std::vector<BaseSegment> hist{{Rational(0), Rational(10)}, {Rational(5), Rational(5)}};
    // walking back in time from (10, 0): both earlier bases qualify for beta
    CHECK(oracle::longest_sequence(v, hist, oracle::SequenceMode::beta) == 3);
    CHECK(oracle::longest_sequence(v, hist, oracle::SequenceMode::alpha) == 1);
}

TEST_CASE("search caps raise resource errors") {
    Caps saved = caps();
    caps().clique = 3;
    CHECK_THROWS_AS(oracle::clique_number(SimpleGraph(4)), ResourceLimitError);
    caps().chromatic = 3;
    CHECK_THROWS_AS(oracle::chromatic_number(SimpleGraph(4)), ResourceLimitError);
    caps().ktt = 3;
    CHECK_THROWS_AS(oracle::has_induced_ktt(SimpleGraph(4), 2), ResourceLimitError);
    caps().longest = 1;
    std::vector<BaseSegment> hist{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK_THROWS_AS(
        oracle::longest_sequence(BaseSegment{Rational(2), Rational(2)}, hist,
                                 oracle::SequenceMode::alpha),
        ResourceLimitError);
    caps() = saved;
}

TEST_CASE("caps spec parsing") {
    Caps c;
    apply_caps_spec(c, "clique=50,longest=14");
    CHECK(c.clique == 50);
    CHECK(c.longest == 14);
    CHECK(c.chromatic == 15);
    CHECK_THROWS_AS(apply_caps_spec(c, "clique"), InvalidInputError);
    CHECK_THROWS_AS(apply_caps_spec(c, "clique=x"), InvalidInputError);
    CHECK_THROWS_AS(apply_caps_spec(c, "bogus=3"), InvalidInputError);
    CHECK_THROWS_AS(apply_caps_spec(c, "clique=0"), InvalidInputError);
}
