// The on-line game: a presenter reveals objects one at a time, a pluggable
// colorer irrevocably assigns colors, and the transcript records everything.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "stripcolor/errors.hpp"
#include "stripcolor/graph.hpp"
#include "stripcolor/oracle.hpp"

namespace stripcolor {

// A color is an ordered integer triple; plain single-integer colors occupy the
// first slot. The lexicographic order provides the "least admissible" rule.
struct Color {
    int a = 0;
    int b = 0;
    int c = 0;

    static Color simple(int id) { return Color{id, 0, 0}; }
    bool is_simple() const { return b == 0 && c == 0; }

    friend bool operator==(const Color&, const Color&) = default;
    friend auto operator<=>(const Color&, const Color&) = default;
};

std::string to_string(const Color& color);

// Behavioral contract of an on-line algorithm: sees the next object and the
// full presented prefix, answers with a color, never revises. Implementations
// must be deterministic given the prefix; randomized ones take a seed.
template <class Object>
class OnlineColorer {
public:
    virtual ~OnlineColorer() = default;
    virtual Color color(const Object& next, std::span<const Object> earlier,
                        std::span<const Color> earlier_colors) = 0;
};

template <class Object>
struct Transcript {
    std::vector<Object> objects;     // presentation order
    std::vector<Color> colors;       // same length, append-only
    std::vector<int> omega_running;  // clique number after each step
    bool proper = true;
    SimpleGraph graph;               // intersection graph of the prefix

    int colors_used() const {
        std::vector<Color> distinct(colors);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        return static_cast<int>(distinct.size());
    }
};

// A single game; one colorer, strictly sequential presentation.
template <class Object>
class Game {
public:
    using IntersectFn = std::function<bool(const Object&, const Object&)>;

    // omega_cap bounds the per-step clique computation; -1 uses the library
    // default, larger games pass their known size.
    Game(OnlineColorer<Object>& colorer, IntersectFn intersects, int omega_cap = -1)
        : colorer_(&colorer), intersects_(std::move(intersects)), omega_cap_(omega_cap) {}

    Color present(const Object& obj) {
        const auto& objs = t_.objects;
        int v = t_.graph.add_vertex();
        std::vector<int> neighbors;
        for (int i = 0; i < v; ++i) {
            if (intersects_(objs[i], obj)) {
                t_.graph.add_edge(i, v);
                neighbors.push_back(i);
            }
        }
        Color color = colorer_->color(obj, std::span<const Object>(objs),
                                      std::span<const Color>(t_.colors));
        for (int i : neighbors)
            if (t_.colors[i] == color) t_.proper = false;
        t_.objects.push_back(obj);
        t_.colors.push_back(color);
        t_.omega_running.push_back(oracle::clique_number(t_.graph, omega_cap_));
        return color;
    }

    const Transcript<Object>& transcript() const { return t_; }
    Transcript<Object> take() { return std::move(t_); }

private:
    OnlineColorer<Object>* colorer_;
    IntersectFn intersects_;
    int omega_cap_ = -1;
    Transcript<Object> t_;
};

template <class Object, class Range>
Transcript<Object> play(const Range& presentation, OnlineColorer<Object>& colorer,
                        typename Game<Object>::IntersectFn intersects) {
    Game<Object> game(colorer, std::move(intersects));
    for (const Object& obj : presentation) game.present(obj);
    return game.take();
}

// Smallest positive integer color not used by any presented object that
// intersects `next`.
template <class Object, class IntersectFn>
Color first_fit(std::span<const Object> prefix, std::span<const Color> prefix_colors,
                const Object& next, const IntersectFn& intersects) {
    std::vector<bool> used(prefix.size() + 2, false);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (!intersects(prefix[i], next)) continue;
        const Color& c = prefix_colors[i];
        if (c.is_simple() && c.a >= 1 && c.a < static_cast<int>(used.size())) used[c.a] = true;
    }
    int id = 1;
    while (used[id]) ++id;
    return Color::simple(id);
}

template <class Object>
class FirstFitColorer final : public OnlineColorer<Object> {
public:
    using IntersectFn = std::function<bool(const Object&, const Object&)>;
    explicit FirstFitColorer(IntersectFn intersects) : intersects_(std::move(intersects)) {}

    Color color(const Object& next, std::span<const Object> earlier,
                std::span<const Color> earlier_colors) override {
        return first_fit(earlier, earlier_colors, next, intersects_);
    }

private:
    IntersectFn intersects_;
};

// Picks the admissible color with the fewest uses so far (ties to the
// smallest id); candidates are 1..max_used+1.
template <class Object>
class LeastUsedColorer final : public OnlineColorer<Object> {
public:
    using IntersectFn = std::function<bool(const Object&, const Object&)>;
    explicit LeastUsedColorer(IntersectFn intersects) : intersects_(std::move(intersects)) {}

    Color color(const Object& next, std::span<const Object> earlier,
                std::span<const Color> earlier_colors) override {
        int max_used = 0;
        for (const Color& c : earlier_colors) max_used = std::max(max_used, c.a);
        std::vector<int> uses(static_cast<std::size_t>(max_used) + 2, 0);
        std::vector<bool> blocked(static_cast<std::size_t>(max_used) + 2, false);
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            uses[earlier_colors[i].a]++;
            if (intersects_(earlier[i], next)) blocked[earlier_colors[i].a] = true;
        }
        // reuse the least-used admissible color; open a fresh one only if all
        // existing colors are blocked
        int pick = 0;
        for (int id = 1; id <= max_used; ++id)
            if (!blocked[id] && (pick == 0 || uses[id] < uses[pick])) pick = id;
        if (pick == 0) pick = max_used + 1;
        return Color::simple(pick);
    }

private:
    IntersectFn intersects_;
};

// Uniform choice among admissible colors 1..max_used+1 from a seeded stream.
template <class Object>
class RandomProperColorer final : public OnlineColorer<Object> {
public:
    using IntersectFn = std::function<bool(const Object&, const Object&)>;
    RandomProperColorer(IntersectFn intersects, std::uint64_t seed)
        : intersects_(std::move(intersects)), rng_(seed) {}

    Color color(const Object& next, std::span<const Object> earlier,
                std::span<const Color> earlier_colors) override {
        int max_used = 0;
        for (const Color& c : earlier_colors) max_used = std::max(max_used, c.a);
        std::vector<bool> blocked(static_cast<std::size_t>(max_used) + 2, false);
        for (std::size_t i = 0; i < earlier.size(); ++i)
            if (intersects_(earlier[i], next)) blocked[earlier_colors[i].a] = true;
        std::vector<int> admissible;
        for (int id = 1; id <= max_used + 1; ++id)
            if (!blocked[id]) admissible.push_back(id);
        return Color::simple(admissible[rng_() % admissible.size()]);
    }

private:
    IntersectFn intersects_;
    std::mt19937_64 rng_;
};

}  // namespace stripcolor
