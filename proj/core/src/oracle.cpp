#include "stripcolor/oracle.hpp"

#include <algorithm>
#include <vector>

#include "stripcolor/caps.hpp"
#include "stripcolor/errors.hpp"

namespace stripcolor::oracle {

namespace {

struct CliqueSolver {
    const SimpleGraph& g;
    int best = 0;

    bool connected(int u, int v) const { return g.adjacent(u, v); }

    // Greedy coloring bound: vertices of `cand` get colors; a vertex whose
    // color c satisfies depth + c <= best cannot extend the incumbent.
    void expand(std::vector<int>& cand, int depth) {
        while (!cand.empty()) {
            if (depth + static_cast<int>(cand.size()) <= best) return;
            // color classes for the bound
            std::vector<int> color(cand.size(), 0);
            std::vector<std::vector<int>> classes;
            for (std::size_t i = 0; i < cand.size(); ++i) {
                int v = cand[i];
                std::size_t c = 0;
                while (true) {
                    if (c == classes.size()) classes.emplace_back();
                    bool ok = true;
                    for (int u : classes[c])
                        if (connected(u, v)) { ok = false; break; }
                    if (ok) break;
                    ++c;
                }
                classes[c].push_back(v);
                color[i] = static_cast<int>(c) + 1;
            }
            // order candidates by color so high-bound vertices branch first
            std::vector<std::size_t> idx(cand.size());
            for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
            std::vector<int> ordered(cand.size());
            std::vector<int> ordered_color(cand.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                ordered[i] = cand[idx[i]];
                ordered_color[i] = color[idx[i]];
            }
            cand = std::move(ordered);

            int v = cand.back();
            int cbound = ordered_color.back();
            if (depth + cbound <= best) return;
            cand.pop_back();
            std::vector<int> next;
            for (int u : cand)
                if (connected(u, v)) next.push_back(u);
            if (depth + 1 > best && next.empty()) best = depth + 1;
            if (!next.empty()) expand(next, depth + 1);
        }
    }
};

struct ChromaticSolver {
    const SimpleGraph& g;
    std::vector<int> order;
    std::vector<int> assigned;
    int k = 0;

    bool color_from(std::size_t i, int used) {
        if (i == order.size()) return true;
        int v = order[i];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (g.adjacent(v, order[j]) && assigned[order[j]] == c) ok = false;
            if (!ok) continue;
            assigned[v] = c;
            if (color_from(i + 1, std::max(used, c))) return true;
            assigned[v] = 0;
        }
        return false;
    }
};

struct KttSolver {
    const SimpleGraph& g;
    int t;

    // Enumerates independent t-subsets of `pool`, invoking `done` on each.
    template <class Done>
    bool independent_subsets(const std::vector<int>& pool, std::vector<int>& acc, std::size_t from,
                             const Done& done) {
        if (static_cast<int>(acc.size()) == t) return done(acc);
        if (pool.size() - from < static_cast<std::size_t>(t) - acc.size()) return false;
        for (std::size_t i = from; i < pool.size(); ++i) {
            int v = pool[i];
            bool ok = true;
            for (int u : acc)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            acc.push_back(v);
            if (independent_subsets(pool, acc, i + 1, done)) return true;
            acc.pop_back();
        }
        return false;
    }

    bool find_other_side(const std::vector<int>& left) {
        // candidates adjacent to every vertex of the left side; independence
        // of `left` keeps them disjoint from it
        std::vector<int> cand;
        for (int v = 0; v < g.size(); ++v) {
            bool all = true;
            for (int u : left)
                if (!g.adjacent(u, v)) { all = false; break; }
            if (all) cand.push_back(v);
        }
        std::vector<int> acc;
        return independent_subsets(cand, acc, 0, [](const std::vector<int>&) { return true; });
    }

    bool run() {
        std::vector<int> all(static_cast<std::size_t>(g.size()));
        for (int v = 0; v < g.size(); ++v) all[v] = v;
        std::vector<int> acc;
        return independent_subsets(all, acc, 0,
                                   [this](const std::vector<int>& left) { return find_other_side(left); });
    }
};

}  // namespace

int clique_number(const SimpleGraph& g, int cap) {
    if (cap < 0) cap = caps().clique;
    if (g.size() > cap) throw ResourceLimitError("graph exceeds clique search cap");
    if (g.size() == 0) return 0;
    CliqueSolver solver{g};
    std::vector<int> cand(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) cand[v] = v;
    solver.best = 0;
    solver.expand(cand, 0);
    return std::max(solver.best, 1);
}

int chromatic_number(const SimpleGraph& g) {
    if (g.size() > caps().chromatic) throw ResourceLimitError("graph exceeds chromatic search cap");
    if (g.size() == 0) return 0;
    int lower = clique_number(g);
    std::vector<int> order(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    for (int k = lower;; ++k) {
        ChromaticSolver solver{g, order, std::vector<int>(static_cast<std::size_t>(g.size()), 0), k};
        if (solver.color_from(0, 0)) return k;
    }
}

bool has_induced_ktt(const SimpleGraph& g, int t) {
    if (g.size() > caps().ktt) throw ResourceLimitError("graph exceeds K_{t,t} search cap");
    if (t <= 0) throw InvalidInputError("t must be positive");
    if (g.size() < 2 * t) return false;
    KttSolver solver{g, t};
    return solver.run();
}

int longest_sequence(const BaseSegment& v, std::span<const BaseSegment> earlier, SequenceMode mode) {
    if (static_cast<int>(earlier.size()) > caps().longest)
        throw ResourceLimitError("history exceeds longest-sequence search cap");
    // Depth-first search over sequences walking backwards in presentation
    // time, keeping top coordinates monotone one way and bottom coordinates
    // the other way (ties allowed).
    auto admissible = [&](const BaseSegment& cur, const BaseSegment& next) {
        if (mode == SequenceMode::alpha)
            return !(next.x_top < cur.x_top) && !(cur.x_bottom < next.x_bottom);
        return !(cur.x_top < next.x_top) && !(next.x_bottom < cur.x_bottom);
    };
    auto dfs = [&](auto&& self, const BaseSegment& cur, int limit) -> int {
        int best = 1;
        for (int i = 0; i < limit; ++i) {
            if (admissible(cur, earlier[i])) best = std::max(best, 1 + self(self, earlier[i], i));
        }
        return best;
    };
    return dfs(dfs, v, static_cast<int>(earlier.size()));
}

}  // namespace stripcolor::oracle
