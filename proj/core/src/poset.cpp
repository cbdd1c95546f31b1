#include "stripcolor/poset.hpp"

#include <algorithm>
#include <unordered_map>

#include "stripcolor/caps.hpp"
#include "stripcolor/errors.hpp"

namespace stripcolor {

Poset::Poset(int n) {
    if (n < 0) throw InvalidInputError("poset size must be non-negative");
    n_ = n;
    rel_.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
}

bool Poset::less(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_) throw InvalidInputError("poset element out of range");
    return rel_[a][b];
}

void Poset::set_less(int a, int b) {
    rel_[a][b] = true;
}

void Poset::verify() const {
    for (int i = 0; i < n_; ++i) {
        if (rel_[i][i]) throw InvalidInputError("relation is not irreflexive");
        for (int j = 0; j < n_; ++j) {
            if (i != j && rel_[i][j] && rel_[j][i])
                throw InvalidInputError("relation is not antisymmetric");
            if (!rel_[i][j]) continue;
            for (int k = 0; k < n_; ++k)
                if (rel_[j][k] && !rel_[i][k]) throw InvalidInputError("relation is not transitive");
        }
    }
}

Poset Poset::from_pairs(int n, std::span<const std::pair<int, int>> less_pairs,
                        bool close_transitively) {
    Poset p(n);
    for (auto [a, b] : less_pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInputError("poset element out of range");
        if (a == b) throw InvalidInputError("element cannot be below itself");
        p.set_less(a, b);
    }
    if (close_transitively) {
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (p.rel_[i][k])
                    for (int j = 0; j < n; ++j)
                        if (p.rel_[k][j]) p.rel_[i][j] = true;
        for (int i = 0; i < n; ++i)
            if (p.rel_[i][i]) throw InvalidInputError("relation contains a cycle");
    }
    p.verify();
    return p;
}

Poset Poset::chain(int n) {
    Poset p(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.set_less(i, j);
    return p;
}

Poset Poset::extended(std::span<const int> up, std::span<const int> down) const {
    std::vector<bool> in_up(static_cast<std::size_t>(n_), false);
    std::vector<bool> in_down(static_cast<std::size_t>(n_), false);
    for (int u : up) {
        if (u < 0 || u >= n_) throw PreconditionError("up element out of range");
        in_up[u] = true;
    }
    for (int d : down) {
        if (d < 0 || d >= n_) throw PreconditionError("down element out of range");
        if (in_up[d]) throw PreconditionError("up and down sets overlap");
        in_down[d] = true;
    }
    // upward/downward closure is required, not inferred
    for (int u = 0; u < n_; ++u) {
        if (in_up[u])
            for (int w = 0; w < n_; ++w)
                if (rel_[u][w] && !in_up[w]) throw PreconditionError("up set is not upward closed");
        if (in_down[u])
            for (int w = 0; w < n_; ++w)
                if (rel_[w][u] && !in_down[w])
                    throw PreconditionError("down set is not downward closed");
    }
    Poset q(n_ + 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) q.rel_[i][j] = rel_[i][j];
    int x = n_;
    for (int u = 0; u < n_; ++u) {
        if (in_up[u]) q.rel_[x][u] = true;
        if (in_down[u]) q.rel_[u][x] = true;
    }
    q.verify();
    return q;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        bool minimal = true;
        for (int j = 0; j < n_ && minimal; ++j)
            if (rel_[j][i]) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i) {
        bool maximal = true;
        for (int j = 0; j < n_ && maximal; ++j)
            if (rel_[i][j]) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

Poset from_family(std::span<const StripObject> objects) {
    const int n = static_cast<int>(objects.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            LeftOf rel = left_of(objects[i], objects[j]);
            if (rel == LeftOf::a_left) pairs.emplace_back(i, j);
            if (rel == LeftOf::b_left) pairs.emplace_back(j, i);
        }
    }
    try {
        return Poset::from_pairs(n, pairs, /*close_transitively=*/false);
    } catch (const InvalidInputError& e) {
        throw InvariantFailureError(std::string("left-of relation is not a partial order: ") +
                                    e.what());
    }
}

namespace {

struct ExtensionEnumerator {
    const Poset& p;
    int n;
    std::vector<LinearExtension>& out;
    LinearExtension current;
    std::vector<bool> used;

    void run() {
        if (static_cast<int>(current.size()) == n) {
            out.push_back(current);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool minimal = true;
            for (int u = 0; u < n && minimal; ++u)
                if (!used[u] && p.less(u, v)) minimal = false;
            if (!minimal) continue;
            used[v] = true;
            current.push_back(v);
            run();
            current.pop_back();
            used[v] = false;
        }
    }
};

}  // namespace

std::vector<LinearExtension> linear_extensions(const Poset& p, int cap) {
    if (cap < 0) cap = caps().extensions;
    if (p.size() > cap)
        throw ResourceLimitError("poset too large for linear extension enumeration");
    std::vector<LinearExtension> out;
    ExtensionEnumerator e{p, p.size(), out, {}, std::vector<bool>(static_cast<std::size_t>(p.size()), false)};
    e.run();
    return out;
}

unsigned long long count_linear_extensions(const Poset& p) {
    const int n = p.size();
    if (n > 30) throw ResourceLimitError("poset too large for extension counting");
    std::unordered_map<std::uint64_t, unsigned long long> memo;
    // count(extensions of the downset encoded by mask)
    auto count = [&](auto&& self, std::uint64_t mask) -> unsigned long long {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        unsigned long long total = 0;
        for (int v = 0; v < n; ++v) {
            if (!((mask >> v) & 1)) continue;
            // v can come last iff nothing above it remains in the mask
            bool maximal = true;
            for (int u = 0; u < n && maximal; ++u)
                if (((mask >> u) & 1) && p.less(v, u)) maximal = false;
            if (maximal) total += self(self, mask & ~(std::uint64_t{1} << v));
        }
        memo.emplace(mask, total);
        return total;
    };
    return count(count, n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

bool is_linear_extension(const Poset& p, const LinearExtension& order) {
    if (static_cast<int>(order.size()) != p.size()) return false;
    std::vector<int> pos(order.size());
    std::vector<bool> seen(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        if (v < 0 || v >= p.size() || seen[v]) return false;
        seen[v] = true;
        pos[v] = static_cast<int>(i);
    }
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.less(a, b) && pos[a] > pos[b]) return false;
    return true;
}

SimpleGraph cocomparability_graph(const Poset& p) {
    SimpleGraph g(p.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j = i + 1; j < p.size(); ++j)
            if (p.incomparable(i, j)) g.add_edge(i, j);
    return g;
}

int height(const Poset& p) {
    const int n = p.size();
    if (n == 0) return 0;
    // longest chain by DP over a topological order
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (p.less(a, b)) return true;
        if (p.less(b, a)) return false;
        return a < b;
    });
    std::vector<int> depth(n, 1);
    int best = 1;
    for (int idx = 0; idx < n; ++idx) {
        int v = order[idx];
        for (int jdx = 0; jdx < idx; ++jdx) {
            int u = order[jdx];
            if (p.less(u, v)) depth[v] = std::max(depth[v], depth[u] + 1);
        }
        best = std::max(best, depth[v]);
    }
    return best;
}

std::vector<StripObject> height2_convex_representation(const Poset& p) {
    if (height(p) > 2) throw PreconditionError("poset has height greater than 2");
    const int n = p.size();
    std::vector<StripObject> out(static_cast<std::size_t>(n));
    if (n == 0) return out;

    // Maximal elements (including isolated ones) become pairwise-crossing
    // segments tangent to the concave arc x = -(y - 1/2)^2; each tangency
    // point is the leftmost family point at its height. Minimal elements
    // become convex hulls of two far-left anchors and the tangency points of
    // the maximal elements they are incomparable to.
    std::vector<int> tops;     // segment elements
    std::vector<int> bottoms;  // hull elements
    for (int v = 0; v < n; ++v) {
        bool is_max = true;
        for (int u = 0; u < n && is_max; ++u)
            if (p.less(v, u)) is_max = false;
        if (is_max)
            tops.push_back(v);
        else
            bottoms.push_back(v);
    }

    const int m = static_cast<int>(tops.size());
    std::vector<Rational> eta(static_cast<std::size_t>(m));
    std::vector<Point> touch(static_cast<std::size_t>(m));
    Rational min_x(0);
    const Rational half(1, 2);
    for (int i = 0; i < m; ++i) {
        eta[i] = Rational(i + 1, m + 1);
        Rational f = -(eta[i] - half) * (eta[i] - half);
        Rational slope = Rational(1) - Rational(2) * eta[i];
        Rational x_top = f + slope * (Rational(1) - eta[i]);
        Rational x_bottom = f - slope * eta[i];
        touch[i] = Point{f, eta[i]};
        out[tops[i]] = StripObject::bare_segment(x_top, x_bottom);
        min_x = min(min_x, min(x_top, x_bottom));
    }
    const Rational anchor_x = min_x - Rational(2);

    for (int x : bottoms) {
        StripObject obj;
        obj.kind = ObjectKind::convex;
        obj.polygon.push_back(Point{anchor_x, Rational(0)});
        for (int i = 0; i < m; ++i)
            if (p.incomparable(x, tops[i])) obj.polygon.push_back(touch[i]);
        obj.polygon.push_back(Point{anchor_x, Rational(1)});
        if (obj.polygon.size() == 2) {
            obj = StripObject::bare_segment(anchor_x, anchor_x);
        } else {
            obj.base = BaseSegment{anchor_x, anchor_x};
        }
        out[x] = obj;
    }
    for (const StripObject& o : out) validate(o);
    return out;
}

}  // namespace stripcolor
