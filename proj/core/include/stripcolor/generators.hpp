// Deterministic instance generators: seeded families of strip objects,
// attached segments and random posets.
#pragma once

#include <cstdint>
#include <vector>

#include "stripcolor/geometry.hpp"
#include "stripcolor/poset.hpp"

namespace stripcolor {

// Deterministic helper over std::mt19937_64 raw output; the distributions are
// implemented here so generated files are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n);
    // uniform integer in [lo, hi]
    long int_in(long lo, long hi);
    bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

private:
    std::uint64_t splitmix();
    std::uint64_t state_;
};

struct GenOptions {
    int n = 0;
    std::uint64_t seed = 0;
    int omega_cap = 0;  // 0: unconstrained
};

// Bare segments (permutation-style input).
std::vector<StripObject> gen_segments(const GenOptions& opt);
// Convex polygons containing a random base, touching both lines.
std::vector<StripObject> gen_convex(const GenOptions& opt);
// Simple, generally non-convex polygons built around a base segment.
std::vector<StripObject> gen_quasi_convex(const GenOptions& opt);
// Negative and positive slope segments attached to the bottom line.
std::vector<AttachedSegment> gen_attached(const GenOptions& opt);

// Random poset: each forward pair of a shuffled order is made comparable with
// the given percentage, then the relation is transitively closed.
Poset random_poset(int n, std::uint64_t seed, int density_percent);

// Random poset of height at most 2 with a few isolated elements.
Poset random_height2_poset(int n, std::uint64_t seed);

}  // namespace stripcolor
