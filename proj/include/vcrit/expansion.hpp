#pragma once

// Clique expansions: replace each vertex of a base graph by a clique ("bag"),
// joining bags completely when the base vertices are adjacent.  For the base
// C5 a profile (k1..k5) of bag sizes pins the graph up to isomorphism, and a
// closed-form criterion decides k-vertex-criticality, which is what makes
// exhaustive enumeration by k cheap.

#include <array>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

// Bag sizes around C5, all >= 1.
using ExpansionProfile = std::array<int, 5>;

// Bags are laid out contiguously in base-vertex order: bag i covers
// [offset_i, offset_i + sizes_i).  sizes must have one entry >= 1 per base
// vertex.
Graph expand(const Graph& base, const std::vector<int>& sizes);

int profile_order(const ExpansionProfile& p);

// Clique number of the C5 expansion: the largest sum of two cyclically
// adjacent bags (maximal cliques are exactly unions of adjacent bag pairs).
int profile_omega(const ExpansionProfile& p);

// Chromatic number of the C5 expansion: max(omega, ceil(n/2)).
int profile_chi(const ExpansionProfile& p);

// Closed-form k-vertex-criticality test for C5 expansions (valid for k >= 3,
// rejected below that): sum k_i = 2k-1 and every cyclically adjacent pair
// sums to at most k-1.
bool is_critical_profile(const ExpansionProfile& p, int k);

// Lexicographic minimum over the 10 rotations/reflections.
ExpansionProfile canonical_profile(const ExpansionProfile& p);

// All canonical profiles that are k-vertex-critical, ascending.  Empty for
// k < 3.
std::vector<ExpansionProfile> critical_profiles(int k);

// Every k-vertex-critical graph in the class, one per isomorphism type:
// K_k first, then the C5 expansions of critical_profiles(k) in order.
std::vector<Graph> enumerate_k_critical(int k);

// count_table(m)[k-1] = number of k-vertex-critical graphs, k = 1..m.
std::vector<long long> count_table(int max_k);

}  // namespace vcrit
