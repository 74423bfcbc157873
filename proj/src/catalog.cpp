#include "vcrit/catalog.hpp"

#include <utility>

#include "vcrit/detect.hpp"
#include "vcrit/expansion.hpp"

namespace vcrit {

namespace {

struct RawEntry {
    int n;
    int m;  // expected edge count, guards the tables below against typos
    std::vector<std::pair<int, int>> edges;
};

// Base graph 1 is C5; 2..10 are the sporadic bases.  In each of 2..10 the
// marked triple {0, 3, 5} is stable.
//
// Beyond expansions of these bases the class has one more imperfect shape:
// graphs split into six non-empty parts A1..A6 where A1 is complete to
// A2 u A5, A2 to A1 u A3 u A6, A3 to A2 u A4 u A6, A4 to A3 u A5, every
// other pair is anti-complete except A5-A6 (unconstrained), and each part
// is P4-free.  One vertex each from A1, A4, A6 again gives a stable set
// meeting every maximal clique.  No recognizer for that shape ships here --
// expansions of the ten bases below are all the callers need.
const std::vector<RawEntry> kRaw = {
    {5, 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}},
    {7, 10, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}}},
    {7, 11, {{0, 1}, {0, 4}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 6}, {5, 6}}},
    {7, 10, {{0, 1}, {0, 4}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {4, 6}, {5, 6}}},
    {7, 11, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {4, 5}}},
    {8, 14, {{0, 1}, {0, 4}, {1, 2}, {1, 5}, {1, 7}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}}},
    {8, 14, {{0, 1}, {0, 4}, {0, 7}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 7}, {4, 5}, {5, 6}}},
    {8, 14, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {3, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}}},
    {8, 14, {{0, 1}, {0, 4}, {0, 6}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}, {3, 6}, {3, 7}, {4, 5}, {4, 7}, {5, 7}}},
    {9, 18, {{0, 1}, {0, 4}, {0, 6}, {0, 7}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 8}}},
};

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    out.reserve(kRaw.size());
    for (std::size_t i = 0; i < kRaw.size(); ++i) {
        const RawEntry& raw = kRaw[i];
        CatalogEntry e;
        e.id = int(i) + 1;
        e.graph = Graph(raw.n, raw.edges);
        if (e.graph.edge_count() != raw.m)
            throw std::logic_error("catalog: edge count mismatch for base graph " +
                                   std::to_string(e.id));
        if (e.id >= 2) {
            e.marked = {0, 3, 5};
            for (int u : e.marked)
                for (int v : e.marked)
                    if (u < v && e.graph.adjacent(u, v))
                        throw std::logic_error("catalog: marked triple not stable in base graph " +
                                               std::to_string(e.id));
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const CatalogEntry& base_graph(int id) {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    if (id < 1 || id > int(catalog.size()))
        throw std::out_of_range("base_graph: id must be in 1.." + std::to_string(catalog.size()));
    return catalog[std::size_t(id) - 1];
}

bool very_good_check(int id, const std::vector<int>& sizes) {
    const CatalogEntry& e = base_graph(id);
    if (e.marked.empty())
        throw std::invalid_argument("very_good_check: base graph " + std::to_string(id) +
                                    " has no marked triple");
    const Graph x = expand(e.graph, sizes);

    std::vector<int> offset(e.graph.order() + 1, 0);
    for (int i = 0; i < e.graph.order(); ++i) offset[i + 1] = offset[i] + sizes[i];
    VertexSet picks;
    for (int b : e.marked) picks.push_back(offset[b]);  // first vertex of each marked bag
    return is_very_good_stable_set(x, picks);
}

}  // namespace vcrit
