#pragma once

// Vertex-criticality: G is k-vertex-critical when chi(G) = k and deleting
// any single vertex drops the chromatic number.

#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

struct CriticalityReport {
    int k = 0;
    int chi = 0;
    // chi(G - v) for each vertex.  When chi == k a single (k-1)-colorability
    // call per vertex settles this exactly (deletion lowers chi by at most
    // one).  When chi != k the map is filled only on request, since the
    // verdict is already decided.
    std::vector<int> chi_minus_vertex;
    bool verdict = false;
};

// exact_per_vertex forces a full chromatic-number computation per deleted
// vertex even when the verdict does not need it.
CriticalityReport is_k_vertex_critical(const Graph& g, int k, bool exact_per_vertex = false);

}  // namespace vcrit
