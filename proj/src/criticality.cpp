#include "vcrit/criticality.hpp"

#include <numeric>

#include "vcrit/coloring.hpp"
#include "vcrit/parallel.hpp"

namespace vcrit {

namespace {

Graph delete_vertex(const Graph& g, int v) {
    VertexSet keep;
    keep.reserve(g.order() - 1);
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

}  // namespace

CriticalityReport is_k_vertex_critical(const Graph& g, int k, bool exact_per_vertex) {
    if (k < 1) throw std::invalid_argument("is_k_vertex_critical: k must be at least 1");

    CriticalityReport r;
    r.k = k;
    r.chi = chromatic_number(g).chi;

    const int n = g.order();
    if (r.chi == k) {
        r.chi_minus_vertex.assign(n, -1);
        if (exact_per_vertex) {
            parallel_for(0, n, [&](int v) {
                r.chi_minus_vertex[v] = chromatic_number(delete_vertex(g, v)).chi;
            });
        } else {
            // chi(G - v) is k-1 or k; one decision call each
            parallel_for(0, n, [&](int v) {
                const Graph h = delete_vertex(g, v);
                const bool drops = (k == 1) ? h.order() == 0 : k_colorable(h, k - 1).has_value();
                r.chi_minus_vertex[v] = drops ? k - 1 : k;
            });
        }
        r.verdict = n > 0;
        for (int v = 0; v < n; ++v)
            if (r.chi_minus_vertex[v] >= k) r.verdict = false;
    } else {
        r.verdict = false;
        if (exact_per_vertex) {
            r.chi_minus_vertex.assign(n, -1);
            parallel_for(0, n, [&](int v) {
                r.chi_minus_vertex[v] = chromatic_number(delete_vertex(g, v)).chi;
            });
        }
    }
    return r;
}

}  // namespace vcrit
