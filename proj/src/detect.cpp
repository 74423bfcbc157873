#include "vcrit/detect.hpp"

#include <algorithm>
#include <charconv>

namespace vcrit {

ForbiddenFamily ForbiddenFamily::gem() { return {"gem", complement(co_gem().pattern)}; }

ForbiddenFamily ForbiddenFamily::co_gem() {
    return {"co-gem", disjoint_union(path_graph(4), empty_graph(1))};
}

ForbiddenFamily ForbiddenFamily::p4() { return {"p4", path_graph(4)}; }

ForbiddenFamily ForbiddenFamily::c5() { return {"c5", cycle_graph(5)}; }

ForbiddenFamily ForbiddenFamily::p3_plus_p1(int ell) {
    if (ell < 0) throw std::invalid_argument("p3_plus_p1: negative count");
    return {"p3+" + std::to_string(ell) + "p1",
            disjoint_union(path_graph(3), empty_graph(ell))};
}

ForbiddenFamily ForbiddenFamily::custom(std::string name, Graph pattern) {
    return {std::move(name), std::move(pattern)};
}

std::optional<ForbiddenFamily> parse_family(std::string_view spec) {
    if (spec == "gem") return ForbiddenFamily::gem();
    if (spec == "co-gem") return ForbiddenFamily::co_gem();
    if (spec == "p4") return ForbiddenFamily::p4();
    if (spec == "c5") return ForbiddenFamily::c5();
    if (spec.starts_with("p3+") && spec.ends_with("p1")) {
        std::string_view num = spec.substr(3, spec.size() - 5);
        int ell = -1;
        auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), ell);
        if (ec == std::errc{} && p == num.data() + num.size() && ell >= 0)
            return ForbiddenFamily::p3_plus_p1(ell);
    }
    return std::nullopt;
}

namespace {

struct InducedSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;   // pattern vertices, descending degree
    std::vector<int> map;     // pattern vertex -> host vertex
    Bitset used;

    bool place(std::size_t i) {
        if (i == order.size()) return true;
        const int pv = order[i];
        Bitset cand(g.order());
        cand.set_all();
        cand.and_not(used);
        for (std::size_t j = 0; j < i; ++j) {
            const int qv = order[j];
            if (h.adjacent(pv, qv))
                cand &= g.row(map[qv]);
            else
                cand.and_not(g.row(map[qv]));
        }
        const int need = h.degree(pv);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            if (g.degree(v) < need) continue;
            map[pv] = v;
            used.set(v);
            if (place(i + 1)) return true;
            used.reset(v);
        }
        return false;
    }
};

}  // namespace

std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern) {
    const int m = pattern.order();
    if (m > g.order()) return std::nullopt;
    if (m == 0) return VertexSet{};

    InducedSearch s{g, pattern, {}, std::vector<int>(m, -1), Bitset(g.order())};
    s.order.resize(m);
    for (int v = 0; v < m; ++v) s.order[v] = v;
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    if (!s.place(0)) return std::nullopt;

    VertexSet w(s.map.begin(), s.map.end());
    std::sort(w.begin(), w.end());
    return w;
}

std::optional<FreenessWitness> freeness_witness(const Graph& g, const ForbiddenFamily& fam) {
    if (auto w = find_induced(g, fam.pattern)) return FreenessWitness{fam.name, *w};
    return std::nullopt;
}

namespace {

struct CliqueSearch {
    const Graph& g;
    std::vector<int> cur;
    std::vector<int> best;

    // Tomita-style: order candidates by a greedy coloring, then branch in
    // reverse color order so the bound prunes early.
    void expand(Bitset cand) {
        std::vector<int> order, bound;
        std::vector<Bitset> classes;
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            std::size_t c = 0;
            while (c < classes.size() && classes[c].intersects(g.row(v))) ++c;
            if (c == classes.size()) classes.emplace_back(g.order());
            classes[c].set(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v = classes[c].first(); v >= 0; v = classes[c].next(v)) {
                order.push_back(v);
                bound.push_back(int(c) + 1);
            }
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (cur.size() + bound[i] <= best.size()) return;
            const int v = order[i];
            cur.push_back(v);
            if (cur.size() > best.size()) best = cur;
            expand(cand & g.row(v));
            cur.pop_back();
            cand.reset(v);
        }
    }
};

}  // namespace

VertexSet max_clique(const Graph& g) {
    if (g.order() == 0) return {};
    CliqueSearch s{g, {}, {}};
    Bitset all(g.order());
    all.set_all();
    s.expand(all);
    std::sort(s.best.begin(), s.best.end());
    return s.best;
}

VertexSet max_stable_set(const Graph& g) { return max_clique(complement(g)); }

namespace {

void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x, std::vector<VertexSet>& out) {
    if (p.none() && x.none()) {
        out.push_back(r.to_vector());
        return;
    }
    // pivot: vertex of P|X with the most neighbors in P, lowest index on ties
    int pivot = -1, pbest = -1;
    Bitset px = p | x;
    for (int u = px.first(); u >= 0; u = px.next(u)) {
        const int cnt = (p & g.row(u)).count();
        if (cnt > pbest) {
            pbest = cnt;
            pivot = u;
        }
    }
    Bitset ext = p;
    ext.and_not(g.row(pivot));
    for (int v = ext.first(); v >= 0; v = ext.next(v)) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.row(v), x & g.row(v), out);
        p.reset(v);
        x.set(v);
    }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    if (g.order() == 0) return out;
    Bitset all(g.order());
    all.set_all();
    bron_kerbosch(g, Bitset(g.order()), all, Bitset(g.order()), out);
    return out;
}

bool is_very_good_stable_set(const Graph& g, const VertexSet& s) {
    Bitset in(g.order());
    for (int v : s) {
        g.check_vertex(v);
        if (in.test(v)) throw std::invalid_argument("is_very_good_stable_set: repeated vertex");
        in.set(v);
    }
    for (int u : s)
        if (in.intersects(g.row(u))) return false;  // not stable
    for (const auto& q : maximal_cliques(g)) {
        bool hit = false;
        for (int v : q)
            if (in.test(v)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

std::optional<VertexSet> find_nontrivial_module(const Graph& g) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            // close {u,v} under splitters: any outside vertex adjacent to
            // some but not all of the set gets pulled in
            Bitset m(n);
            m.set(u);
            m.set(v);
            int size = 2;
            bool grew = true;
            while (grew && size < n) {
                grew = false;
                for (int w = 0; w < n; ++w) {
                    if (m.test(w)) continue;
                    const Bitset hit = g.row(w) & m;
                    if (hit.none() || hit == m) continue;  // uniform on m
                    m.set(w);
                    ++size;
                    grew = true;
                }
            }
            if (size < n) return m.to_vector();
        }
    return std::nullopt;
}

}  // namespace vcrit
