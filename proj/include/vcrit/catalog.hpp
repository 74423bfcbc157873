#pragma once

// The ten base graphs whose clique expansions exhaust the imperfect part of
// the class, plus the marked stable triple used by the very-good-stable-set
// property.

#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

struct CatalogEntry {
    int id = 0;  // 1..10
    Graph graph;
    // For id >= 2: the three vertices whose bags always yield a stable set
    // meeting every maximal clique of any clique expansion.  Empty for id 1.
    VertexSet marked;
};

// id in 1..10, throws std::out_of_range otherwise.
const CatalogEntry& base_graph(int id);

// Expand base id by the given bag sizes, pick the first vertex of each
// marked bag and check that the triple is a very good stable set.  Only
// defined for ids with a marked triple (2..10).
bool very_good_check(int id, const std::vector<int>& sizes);

}  // namespace vcrit
