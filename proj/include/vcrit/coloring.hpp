#pragma once

// Exact proper coloring.  k_colorable is a complete backtracking search:
// a maximum clique is precolored to fix color symmetry, vertices are picked
// by saturation (DSATUR order) and only one "fresh" color is ever open at a
// time.  No heuristic shortcuts -- an absent answer is a proof.

#include <optional>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

struct Coloring {
    int k = 0;                    // color budget; values below are < k
    std::vector<int> assignment;  // one color per vertex

    bool operator==(const Coloring&) const = default;
};

// A proper coloring with colors in [0, k), or nullopt when none exists.
// k must be at least 1.
std::optional<Coloring> k_colorable(const Graph& g, int k);

bool verify_coloring(const Graph& g, const Coloring& c);

struct ChromaticResult {
    int chi = 0;
    Coloring coloring;
};

// Exact chromatic number plus an optimal coloring (0 for the empty graph).
ChromaticResult chromatic_number(const Graph& g);

}  // namespace vcrit
