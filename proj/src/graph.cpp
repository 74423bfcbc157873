#include "vcrit/graph.hpp"

#include <algorithm>
#include <numeric>

namespace vcrit {

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet v = s;
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("induced_subgraph: repeated vertex");
    for (int x : v) g.check_vertex(x);

    Graph h(int(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (g.adjacent(v[i], v[j])) h.add_edge(int(i), int(j));
    return h;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) h.add_edge(u, v);
    return h;
}

namespace {

// Map vertices of a onto b one at a time (ascending index in a), taking only
// targets of equal degree whose adjacency to everything already mapped is
// consistent.  At pattern sizes (<= 12) the degree pruning is plenty.
bool extend_bijection(const Graph& a, const Graph& b, std::vector<int>& map,
                      std::vector<bool>& used, int next) {
    const int n = a.order();
    if (next == n) return true;
    for (int t = 0; t < n; ++t) {
        if (used[t] || b.degree(t) != a.degree(next)) continue;
        bool ok = true;
        for (int p = 0; p < next; ++p)
            if (a.adjacent(p, next) != b.adjacent(map[p], t)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[next] = t;
        used[t] = true;
        if (extend_bijection(a, b, map, used, next + 1)) return true;
        used[t] = false;
    }
    return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit)
        throw std::invalid_argument("are_isomorphic: order exceeds supported limit of " +
                                    std::to_string(kIsomorphismLimit) + " vertices");
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;

    const int n = a.order();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::vector<int> sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return extend_bijection(a, b, map, used, 0);
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v)) g.add_edge(u, v);
    const int off = a.order();
    for (int u = 0; u < b.order(); ++u)
        for (int v = u + 1; v < b.order(); ++v)
            if (b.adjacent(u, v)) g.add_edge(off + u, off + v);
    return g;
}

}  // namespace vcrit
