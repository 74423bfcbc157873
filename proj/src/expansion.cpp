#include "vcrit/expansion.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vcrit {

Graph expand(const Graph& base, const std::vector<int>& sizes) {
    const int b = base.order();
    if (int(sizes.size()) != b)
        throw std::invalid_argument("expand: need one bag size per base vertex");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("expand: bag sizes must be positive");

    std::vector<int> offset(b + 1, 0);
    for (int i = 0; i < b; ++i) offset[i + 1] = offset[i] + sizes[i];

    Graph g(offset[b]);
    for (int i = 0; i < b; ++i)
        for (int u = offset[i]; u < offset[i + 1]; ++u)
            for (int v = u + 1; v < offset[i + 1]; ++v) g.add_edge(u, v);
    for (int i = 0; i < b; ++i)
        for (int j = i + 1; j < b; ++j) {
            if (!base.adjacent(i, j)) continue;
            for (int u = offset[i]; u < offset[i + 1]; ++u)
                for (int v = offset[j]; v < offset[j + 1]; ++v) g.add_edge(u, v);
        }
    return g;
}

namespace {

void check_profile(const ExpansionProfile& p) {
    for (int s : p)
        if (s < 1) throw std::invalid_argument("profile: bag sizes must be positive");
}

}  // namespace

int profile_order(const ExpansionProfile& p) {
    check_profile(p);
    return std::accumulate(p.begin(), p.end(), 0);
}

int profile_omega(const ExpansionProfile& p) {
    check_profile(p);
    int w = 0;
    for (int i = 0; i < 5; ++i) w = std::max(w, p[i] + p[(i + 1) % 5]);
    return w;
}

int profile_chi(const ExpansionProfile& p) {
    const int n = profile_order(p);
    return std::max(profile_omega(p), (n + 1) / 2);
}

bool is_critical_profile(const ExpansionProfile& p, int k) {
    check_profile(p);
    if (k < 3) throw std::invalid_argument("is_critical_profile: criterion requires k >= 3");
    if (profile_order(p) != 2 * k - 1) return false;
    for (int i = 0; i < 5; ++i)
        if (p[i] + p[(i + 1) % 5] > k - 1) return false;
    return true;
}

ExpansionProfile canonical_profile(const ExpansionProfile& p) {
    check_profile(p);
    ExpansionProfile best = p;
    for (int r = 0; r < 5; ++r) {
        ExpansionProfile rot;
        for (int i = 0; i < 5; ++i) rot[i] = p[(i + r) % 5];
        ExpansionProfile ref;
        for (int i = 0; i < 5; ++i) ref[i] = rot[4 - i];
        best = std::min(best, std::min(rot, ref));
    }
    return best;
}

std::vector<ExpansionProfile> critical_profiles(int k) {
    std::vector<ExpansionProfile> out;
    if (k < 3) return out;
    const int total = 2 * k - 1;
    std::set<ExpansionProfile> seen;
    // parts are capped by the adjacent-sum condition (neighbor >= 1)
    for (int a = 1; a <= k - 2; ++a)
        for (int b = 1; b <= k - 2; ++b)
            for (int c = 1; c <= k - 2; ++c)
                for (int d = 1; d <= k - 2; ++d) {
                    const int e = total - a - b - c - d;
                    if (e < 1) continue;
                    const ExpansionProfile p{a, b, c, d, e};
                    if (!is_critical_profile(p, k)) continue;
                    seen.insert(canonical_profile(p));
                }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<Graph> enumerate_k_critical(int k) {
    if (k < 1) throw std::invalid_argument("enumerate_k_critical: k must be at least 1");
    std::vector<Graph> out;
    out.push_back(complete_graph(k));
    if (k <= 2) return out;
    const Graph c5 = cycle_graph(5);
    for (const auto& p : critical_profiles(k))
        out.push_back(expand(c5, std::vector<int>(p.begin(), p.end())));
    return out;
}

std::vector<long long> count_table(int max_k) {
    if (max_k < 1) throw std::invalid_argument("count_table: max_k must be at least 1");
    std::vector<long long> t;
    t.reserve(max_k);
    for (int k = 1; k <= max_k; ++k)
        t.push_back(k <= 2 ? 1 : 1 + (long long)critical_profiles(k).size());
    return t;
}

}  // namespace vcrit
