// Finite strict partial orders, linear extensions, cocomparability graphs and
// the constructive convex strip representation of height-2 posets.
#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "stripcolor/geometry.hpp"
#include "stripcolor/graph.hpp"

namespace stripcolor {

using LinearExtension = std::vector<int>;

// Irreflexivity, antisymmetry and transitivity are enforced on construction
// and after every mutation-by-copy.
class Poset {
public:
    Poset() = default;
    explicit Poset(int n);  // antichain

    // Builds from arbitrary a < b pairs; transitively closes when asked and
    // rejects cycles.
    static Poset from_pairs(int n, std::span<const std::pair<int, int>> less_pairs,
                            bool close_transitively = true);
    static Poset chain(int n);
    static Poset antichain(int n) { return Poset(n); }

    int size() const { return n_; }
    bool less(int a, int b) const;
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    bool incomparable(int a, int b) const { return a != b && !comparable(a, b); }

    // New poset with one extra element (index n) above everything in `down`
    // and below everything in `up`; the given sets must already be closed.
    Poset extended(std::span<const int> up, std::span<const int> down) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n_ == b.n_ && a.rel_ == b.rel_;
    }

private:
    void set_less(int a, int b);
    void verify() const;

    int n_ = 0;
    std::vector<std::vector<bool>> rel_;
};

// Poset induced by the left-of relation on a family of strip objects; raises
// InvariantFailureError if the relation fails to be transitive.
Poset from_family(std::span<const StripObject> objects);

// All linear extensions; cap defaults to caps().extensions elements.
std::vector<LinearExtension> linear_extensions(const Poset& p, int cap = -1);

// Independent recursive counter over downsets (used as the enumeration oracle).
unsigned long long count_linear_extensions(const Poset& p);

bool is_linear_extension(const Poset& p, const LinearExtension& order);

// Edge ij iff i and j are incomparable.
SimpleGraph cocomparability_graph(const Poset& p);

// Number of elements in a longest chain.
int height(const Poset& p);

// Convex strip representation of a height <= 2 poset, indexed by element. The
// recovered from_family poset equals the input under identity indexing.
std::vector<StripObject> height2_convex_representation(const Poset& p);

}  // namespace stripcolor
