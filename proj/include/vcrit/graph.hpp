#pragma once

// Core graph type: simple undirected graphs on 0-indexed vertices, stored as
// one adjacency bitset per vertex so the search code (cliques, embeddings,
// coloring) runs on word-parallel set operations.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcrit {

// Fixed-size bitset whose width is chosen at construction.  Only the
// operations the search kernels need; bit indices are assumed in range.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    // Lowest set bit, or -1 when empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // Lowest set bit strictly greater than i, or -1.
    int next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        std::size_t w = std::size_t(i) >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return int(w * 64) + std::countr_zero(cur);
            if (++w == words_.size()) return -1;
            cur = words_[w];
        }
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // *this &= ~o
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    // every bit of *this is also set in o
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        for (int i = first(); i >= 0; i = next(i)) v.push_back(i);
        return v;
    }

    bool operator==(const Bitset&) const = default;

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~std::uint64_t{0}) >> (64 - (nbits_ & 63));
        if (nbits_ == 0 && !words_.empty()) words_.back() = 0;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

// A set of vertices of some graph, kept sorted ascending with no duplicates.
using VertexSet = std::vector<int>;

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(check_order(n)), rows_(n, Bitset(n)) {}

    // Build from an order and an edge list.  Loops and out-of-range
    // endpoints are rejected; duplicate edges are harmless.
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int order() const { return n_; }

    long long edge_count() const {
        long long twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(int u, int v) const { return rows_[u].test(v); }

    // Open neighborhood of v as a bitset over [0, n).
    const Bitset& row(int v) const { return rows_[v]; }

    int degree(int v) const { return rows_[v].count(); }

    VertexSet neighbors(int v) const { return rows_[v].to_vector(); }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

    bool operator==(const Graph&) const = default;

private:
    static int check_order(int n) {
        if (n < 0) throw std::invalid_argument("graph: negative order");
        return n;
    }

    int n_ = 0;
    std::vector<Bitset> rows_;
};

// G[s]; members of s must be valid, distinct vertices of g.  Vertex i of the
// result is s[i] (s is sorted first, so relabeling is order-preserving).
Graph induced_subgraph(const Graph& g, const VertexSet& s);

Graph complement(const Graph& g);

// Exact isomorphism test by backtracking over degree-compatible bijections.
// Only intended for pattern-sized graphs; orders above kIsomorphismLimit are
// rejected with an exception rather than silently taking forever.
inline constexpr int kIsomorphismLimit = 12;
bool are_isomorphic(const Graph& a, const Graph& b);

// Small constructors used all over the tests and the detector patterns.
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace vcrit
