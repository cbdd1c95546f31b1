// Brute-force ground truth: exact clique and chromatic numbers, induced
// K_{t,t} detection, exhaustive longest index sequences.
#pragma once

#include <span>

#include "stripcolor/geometry.hpp"
#include "stripcolor/graph.hpp"

namespace stripcolor::oracle {

// Exact clique number by branch and bound. The cap guards the exact search;
// -1 uses caps().clique, callers may pass an explicit larger limit.
int clique_number(const SimpleGraph& g, int cap = -1);

// Exact chromatic number by backtracking search; cap caps().chromatic vertices.
int chromatic_number(const SimpleGraph& g);

// True iff some 2t vertices induce exactly K_{t,t}; cap caps().ktt vertices.
bool has_induced_ktt(const SimpleGraph& g, int t);

enum class SequenceMode { alpha, beta };

// Length of a longest sequence of base segments that starts at v, walks
// backwards through the presentation order, and is coordinate monotone:
// alpha means top coordinates non-decreasing and bottom non-increasing along
// the sequence, beta the mirror image. Exhaustive; cap caps().longest history.
int longest_sequence(const BaseSegment& v, std::span<const BaseSegment> earlier, SequenceMode mode);

}  // namespace stripcolor::oracle
