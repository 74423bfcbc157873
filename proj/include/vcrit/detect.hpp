#pragma once

// Structure detectors: induced-subgraph search, forbidden-family freeness
// witnesses, clique machinery and modular-decomposition lite (one nontrivial
// module is all the callers ever need).

#include <optional>
#include <string>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// A named forbidden pattern.  The stock families of interest here are the
// gem (P4 plus a dominating vertex), its complement the co-gem (P4 + P1),
// P4, C5 and the split unions P3 + l*P1 for l >= 0.
struct ForbiddenFamily {
    std::string name;
    Graph pattern;

    static ForbiddenFamily gem();
    static ForbiddenFamily co_gem();
    static ForbiddenFamily p4();
    static ForbiddenFamily c5();
    static ForbiddenFamily p3_plus_p1(int ell);
    static ForbiddenFamily custom(std::string name, Graph pattern);
};

// Parse a family spelling as used on the command line: "gem", "co-gem",
// "p4", "c5" or "p3+<l>p1".  Unknown spellings yield nullopt.
std::optional<ForbiddenFamily> parse_family(std::string_view spec);

// Vertices of g inducing a copy of pattern, or nullopt.  Pattern vertices
// are matched in descending-degree order, candidate hosts in ascending
// index, so the result is deterministic.
std::optional<VertexSet> find_induced(const Graph& g, const Graph& pattern);

struct FreenessWitness {
    std::string family;
    VertexSet vertices;
};

// nullopt when g is fam-free, otherwise the first induced copy found.
std::optional<FreenessWitness> freeness_witness(const Graph& g, const ForbiddenFamily& fam);

// A maximum clique / maximum stable set (branch and bound with a greedy
// coloring bound; lowest-index tie-breaking, so output is deterministic).
VertexSet max_clique(const Graph& g);
VertexSet max_stable_set(const Graph& g);

// All maximal cliques (Bron--Kerbosch with pivoting), deterministic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// True when s is a stable set meeting every maximal clique of g.
bool is_very_good_stable_set(const Graph& g, const VertexSet& s);

// A module M with 1 < |M| < n (some outside vertex sees either all or none
// of M, for every outside vertex), or nullopt when g is prime in this sense.
// Found by closing vertex pairs under splitters; first pair in lexicographic
// order wins.
std::optional<VertexSet> find_nontrivial_module(const Graph& g);

}  // namespace vcrit
