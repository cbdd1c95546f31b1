// Small dense simple graphs with bit-packed adjacency rows.
#pragma once

#include <cstdint>
#include <vector>

#include "stripcolor/errors.hpp"

namespace stripcolor {

class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) { resize(n); }

    int size() const { return n_; }

    void resize(int n) {
        if (n < 0) throw InvalidInputError("graph size must be non-negative");
        n_ = n;
        words_ = (n + 63) / 64;
        rows_.assign(static_cast<std::size_t>(n), std::vector<std::uint64_t>(words_, 0));
    }

    int add_vertex() {
        ++n_;
        int w = (n_ + 63) / 64;
        if (w != words_) {
            words_ = w;
            for (auto& row : rows_) row.resize(words_, 0);
        }
        rows_.emplace_back(words_, 0);
        return n_ - 1;
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw InvalidInputError("loops are not allowed");
        rows_[u][v / 64] |= (std::uint64_t{1} << (v % 64));
        rows_[v][u / 64] |= (std::uint64_t{1} << (u % 64));
    }

    bool adjacent(int u, int v) const {
        check(u);
        check(v);
        return (rows_[u][v / 64] >> (v % 64)) & 1u;
    }

    int degree(int v) const {
        check(v);
        int d = 0;
        for (std::uint64_t w : rows_[v]) d += __builtin_popcountll(w);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int v = 0; v < n_; ++v) total += degree(v);
        return total / 2;
    }

    const std::vector<std::uint64_t>& row(int v) const {
        check(v);
        return rows_[v];
    }

    int words() const { return words_; }

    static SimpleGraph complete(int n) {
        SimpleGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw InvalidInputError("vertex index out of range");
    }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
};

}  // namespace stripcolor
