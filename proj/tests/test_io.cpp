#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "stripcolor/engine.hpp"
#include "stripcolor/errors.hpp"
#include "stripcolor/generators.hpp"
#include "stripcolor/instance_io.hpp"
#include "stripcolor/strip_coloring.hpp"

using namespace stripcolor;
namespace fx = stripcolor::fixtures;

TEST_CASE("instance files round-trip byte for byte") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Instance inst;
        inst.kind = InstanceKind::strip;
        SUBCASE("segments") { inst.strip_objects = gen_segments(GenOptions{8, seed, 3}); }
        SUBCASE("convex") { inst.strip_objects = gen_convex(GenOptions{8, seed, 3}); }
        SUBCASE("quasi convex") { inst.strip_objects = gen_quasi_convex(GenOptions{8, seed, 3}); }
        std::string text = serialize_instance(inst);
        Instance parsed = parse_instance(text);
        CHECK(serialize_instance(parsed) == text);
        CHECK(parsed.strip_objects.size() == inst.strip_objects.size());
    }
    Instance att;
    att.kind = InstanceKind::attached;
    att.attached = gen_attached(GenOptions{9, 2, 2});
    std::string text = serialize_instance(att);
    CHECK(serialize_instance(parse_instance(text)) == text);
}

TEST_CASE("generation is deterministic per seed") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Instance a, b;
        a.kind = b.kind = InstanceKind::strip;
        a.strip_objects = gen_quasi_convex(GenOptions{10, seed, 4});
        b.strip_objects = gen_quasi_convex(GenOptions{10, seed, 4});
        CHECK(serialize_instance(a) == serialize_instance(b));
    }
    CHECK(gen_segments(GenOptions{0, 1, 0}).empty());
}

TEST_CASE("instance parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_instance(""), InvalidInputError);
    CHECK_THROWS_AS(parse_instance("stripcolor-instance v2 strip\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_instance("stripcolor-instance v1 bogus\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_instance("stripcolor-instance v1 strip\nattached 0/1 1/1 1/1\n"),
                    InvalidInputError);
    // non-simple polygon is caught by validation
    CHECK_THROWS_AS(
        parse_instance("stripcolor-instance v1 strip\n"
                       "strip quasi base 0/1 0/1 poly 0/1 0/1 1/1 1/1 1/1 0/1 0/1 1/1\n"),
        InvalidInputError);
    // comments and blank lines are fine
    Instance inst = parse_instance(
        "# comment\n\nstripcolor-instance v1 attached\nattached 0/1 -1/1 1/1\n");
    CHECK(inst.attached.size() == 1);
}

TEST_CASE("poset files round-trip") {
    Poset q = fx::height3_fixture();
    std::string text = serialize_poset(q);
    CHECK(parse_poset(text) == q);
    CHECK_THROWS_AS(parse_poset("stripcolor-poset v1 2\nless 0 0\n"), InvalidInputError);
    CHECK_THROWS_AS(parse_poset("nonsense\n"), InvalidInputError);
}

TEST_CASE("triple colors flatten by lexicographic rank") {
    std::vector<Color> colors{Color{1, 3, 1}, Color{1, 1, 1}, Color{2, 1, 1}, Color{1, 3, 1}};
    CHECK(flatten_colors(colors) == std::vector<int>{2, 1, 3, 2});
    std::vector<Color> simple{Color::simple(1), Color::simple(2), Color::simple(1)};
    CHECK(flatten_colors(simple) == std::vector<int>{1, 2, 1});
}

TEST_CASE("transcripts serialize one record per step") {
    auto objects = gen_segments(GenOptions{5, 9, 3});
    StripColorer colorer;
    auto t = play<StripObject>(objects, colorer,
                               [](const StripObject& a, const StripObject& b) {
                                   return intersects(a, b);
                               });
    std::string text = serialize_transcript(t, "stripcolor");
    CHECK(text.find("stripcolor-transcript v1 algorithm=stripcolor n=5 proper=1") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
    CHECK(text.find("step 0 ") != std::string::npos);
    CHECK(text.find("triple 1,1,1") != std::string::npos);
}

TEST_CASE("report rows") {
    ReportRow row{7, "stripcolor", 40, 5, 23, 1800, true, 4};
    CHECK(report_line(row) == "7\tstripcolor\t40\t5\t23\t1800\t1\t4\n");
    ReportRow ff{1, "firstfit", 3, 2, 2, -1, false, -1};
    CHECK(report_line(ff) == "1\tfirstfit\t3\t2\t2\t-\t0\t-\n");
    CHECK(report_header().find("seed\talgorithm") == 0);
}
