#include "vcrit/coloring.hpp"

#include <algorithm>

#include "vcrit/detect.hpp"

namespace vcrit {

namespace {

struct ColorSearch {
    const Graph& g;
    const int k;
    std::vector<int> color;             // -1 = unassigned
    std::vector<std::vector<int>> seen; // seen[v][c]: colored neighbors of v with color c
    std::vector<int> sat;               // distinct colors adjacent to v
    int colored = 0;
    int used = 0;                       // colors 0..used-1 are in use

    explicit ColorSearch(const Graph& graph, int budget)
        : g(graph),
          k(budget),
          color(graph.order(), -1),
          seen(graph.order(), std::vector<int>(budget, 0)),
          sat(graph.order(), 0) {}

    void assign(int v, int c) {
        color[v] = c;
        ++colored;
        const Bitset& nb = g.row(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (color[u] < 0 && seen[u][c]++ == 0) ++sat[u];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        --colored;
        const Bitset& nb = g.row(v);
        for (int u = nb.first(); u >= 0; u = nb.next(u))
            if (color[u] < 0 && --seen[u][c] == 0) --sat[u];
    }

    bool solve() {
        if (colored == g.order()) return true;
        // most saturated uncolored vertex, lowest index on ties
        int v = -1;
        for (int u = 0; u < g.order(); ++u)
            if (color[u] < 0 && (v < 0 || sat[u] > sat[v])) v = u;
        if (sat[v] >= k) return false;  // wipeout
        const int cap = std::min(k - 1, used);  // at most one fresh color
        for (int c = 0; c <= cap; ++c) {
            if (seen[v][c]) continue;
            const bool fresh = (c == used);
            if (fresh) ++used;
            assign(v, c);
            if (solve()) return true;
            unassign(v, c);
            if (fresh) --used;
        }
        return false;
    }
};

}  // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k_colorable: k must be at least 1");
    const int n = g.order();
    if (n == 0) return Coloring{k, {}};

    const VertexSet clique = max_clique(g);
    if (int(clique.size()) > k) return std::nullopt;

    ColorSearch s(g, k);
    for (int v : clique) s.assign(v, s.used++);
    if (!s.solve()) return std::nullopt;
    return Coloring{k, std::move(s.color)};
}

bool verify_coloring(const Graph& g, const Coloring& c) {
    const int n = g.order();
    if (int(c.assignment.size()) != n) return false;
    for (int v = 0; v < n; ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.k) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) && c.assignment[u] == c.assignment[v]) return false;
    return true;
}

ChromaticResult chromatic_number(const Graph& g) {
    if (g.order() == 0) return {0, Coloring{0, {}}};
    for (int k = std::max<int>(1, int(max_clique(g).size()));; ++k)
        if (auto c = k_colorable(g, k)) return {k, std::move(*c)};
}

}  // namespace vcrit
