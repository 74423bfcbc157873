#include "vcrit/certify.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "vcrit/detect.hpp"

namespace vcrit {

namespace {

// ---- bag-level search for induced C5 clique expansions ----

struct BagSearch {
    const Graph& g;
    const std::array<int, 5>& want;  // bag sizes in cyclic position order
    std::array<std::vector<int>, 5> bags;
    Bitset taken;

    // On C5 positions 0..4 (edges i ~ i+1 mod 5), placing in order 0,1,2,3,4
    // means position i must join position i-1 (and position 4 must join 0),
    // and avoid every other earlier position.
    Bitset candidates(int pos) const {
        Bitset cand(g.order());
        cand.set_all();
        cand.and_not(taken);
        for (int prev = 0; prev < pos; ++prev) {
            const bool adj = (prev == pos - 1) || (pos == 4 && prev == 0);
            for (int v : bags[prev]) {
                if (adj)
                    cand &= g.row(v);
                else
                    cand.and_not(g.row(v));
            }
        }
        return cand;
    }

    // Enumerate cliques of size need inside cand, ascending, and recurse.
    bool grow_bag(int pos, Bitset cand, int need) {
        if (need == 0) return place(pos + 1);
        for (int v = cand.first(); v >= 0; v = cand.next(v)) {
            bags[pos].push_back(v);
            taken.set(v);
            Bitset rest = cand & g.row(v);
            // only vertices above v, to list each bag once
            for (int u = rest.first(); u >= 0 && u <= v; u = rest.next(u)) rest.reset(u);
            if (grow_bag(pos, rest, need - 1)) return true;
            taken.reset(v);
            bags[pos].pop_back();
            cand.reset(v);
        }
        return false;
    }

    bool place(int pos) {
        if (pos == 5) return true;
        return grow_bag(pos, candidates(pos), want[pos]);
    }
};

}  // namespace

std::optional<VertexSet> find_induced_expansion(const Graph& g, const ExpansionProfile& p) {
    if (profile_order(p) > g.order()) return std::nullopt;

    // every rotation/reflection of p describes the same graph, but each
    // orients the bag walk differently; search each distinct image once
    std::set<ExpansionProfile> images;
    for (int r = 0; r < 5; ++r) {
        ExpansionProfile rot;
        for (int i = 0; i < 5; ++i) rot[i] = p[(i + r) % 5];
        images.insert(rot);
        ExpansionProfile ref;
        for (int i = 0; i < 5; ++i) ref[i] = rot[4 - i];
        images.insert(ref);
    }

    for (const auto& q : images) {
        BagSearch s{g, q, {}, Bitset(g.order())};
        if (!s.place(0)) continue;
        VertexSet w;
        for (const auto& bag : s.bags) w.insert(w.end(), bag.begin(), bag.end());
        std::sort(w.begin(), w.end());
        return w;
    }
    return std::nullopt;
}

bool matches_expansion(const Graph& g, const VertexSet& s, const ExpansionProfile& p) {
    for (int v : s)
        if (v < 0 || v >= g.order()) return false;
    VertexSet sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    int total = 0;
    for (int b : p) {
        if (b < 1) return false;
        total += b;
    }
    if (int(sorted.size()) != total) return false;

    const Graph h = induced_subgraph(g, sorted);
    const int n = h.order();

    // true-twin classes: equal closed neighborhoods.  In a C5 clique
    // expansion these are exactly the bags, and twins are automatically
    // adjacent, so class structure alone settles the claim.
    std::vector<Bitset> closed(n, Bitset(n));
    for (int v = 0; v < n; ++v) {
        closed[v] = h.row(v);
        closed[v].set(v);
    }
    std::vector<int> cls(n, -1);
    std::vector<int> rep;  // one representative per class
    for (int v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < rep.size(); ++c)
            if (closed[v] == closed[rep[c]]) {
                cls[v] = int(c);
                break;
            }
        if (cls[v] < 0) {
            cls[v] = int(rep.size());
            rep.push_back(v);
        }
    }
    if (rep.size() != 5) return false;

    // quotient on the 5 classes must be a 5-cycle
    std::array<std::array<bool, 5>, 5> adj{};
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            adj[a][b] = adj[b][a] = h.adjacent(rep[a], rep[b]);
    std::array<int, 5> deg{};
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            if (b != a && adj[a][b]) ++deg[a];
    for (int a = 0; a < 5; ++a)
        if (deg[a] != 2) return false;

    // walk the cycle, reading bag sizes as we go
    std::array<int, 5> size{};
    for (int v = 0; v < n; ++v) ++size[cls[v]];
    ExpansionProfile walked{};
    int prev = -1, cur = 0;
    for (int step = 0; step < 5; ++step) {
        walked[step] = size[cur];
        int nxt = -1;
        for (int b = 0; b < 5; ++b)
            if (b != prev && b != cur && adj[cur][b]) nxt = b;
        if (nxt < 0) return false;  // degree-2 quotient but not one cycle
        prev = cur;
        cur = nxt;
    }
    if (cur != 0) return false;  // closed after 5 steps only if a 5-cycle

    return canonical_profile(walked) == canonical_profile(p);
}

Certificate certify(const Graph& g, int k, const CertifyOptions& opt) {
    if (k < 1) throw std::invalid_argument("certify: k must be at least 1");
    if (k >= opt.max_level)
        throw std::invalid_argument("certify: enumeration level too large (k = " +
                                    std::to_string(k) + ", ceiling " +
                                    std::to_string(opt.max_level) + ")");

    Certificate cert;
    cert.k = k;

    for (const auto& fam : {ForbiddenFamily::gem(), ForbiddenFamily::co_gem()})
        if (auto w = freeness_witness(g, fam)) {
            cert.verdict = Certificate::Verdict::out_of_class;
            cert.witness = w->vertices;
            cert.claimed_family = w->family;
            return cert;
        }

    const VertexSet clique = max_clique(g);
    if (int(clique.size()) >= k + 1) {
        cert.verdict = Certificate::Verdict::no;
        cert.witness = VertexSet(clique.begin(), clique.begin() + k + 1);
        cert.claimed_clique = k + 1;
        return cert;
    }

    for (const auto& p : critical_profiles(k + 1))
        if (auto w = find_induced_expansion(g, p)) {
            cert.verdict = Certificate::Verdict::no;
            cert.witness = *w;
            cert.claimed_profile = p;
            return cert;
        }

    // in this class, no critical obstruction at level k+1 means k-colorable
    auto coloring = k_colorable(g, k);
    if (!coloring)
        throw std::logic_error(
            "certify: internal inconsistency -- no obstruction found yet not k-colorable");
    cert.verdict = Certificate::Verdict::yes;
    cert.coloring = std::move(*coloring);
    return cert;
}

bool verify_certificate(const Graph& g, int k, const Certificate& cert) {
    try {
        if (cert.k != k || k < 1) return false;

        switch (cert.verdict) {
            case Certificate::Verdict::yes: {
                if (!cert.coloring || cert.witness) return false;
                return cert.coloring->k == k && verify_coloring(g, *cert.coloring);
            }

            case Certificate::Verdict::no: {
                if (!cert.witness || cert.coloring) return false;
                const VertexSet& w = *cert.witness;
                if (cert.claimed_clique && !cert.claimed_profile) {
                    if (*cert.claimed_clique != k + 1) return false;
                    if (int(w.size()) != k + 1) return false;
                    std::set<int> distinct(w.begin(), w.end());
                    if (int(distinct.size()) != k + 1) return false;
                    for (int v : w)
                        if (v < 0 || v >= g.order()) return false;
                    for (int u : w)
                        for (int v : w)
                            if (u < v && !g.adjacent(u, v)) return false;
                    return true;
                }
                if (cert.claimed_profile && !cert.claimed_clique) {
                    if (!is_critical_profile(*cert.claimed_profile, k + 1)) return false;
                    return matches_expansion(g, w, *cert.claimed_profile);
                }
                return false;
            }

            case Certificate::Verdict::out_of_class: {
                if (!cert.witness || cert.coloring) return false;
                Graph pattern;
                if (cert.claimed_family == "gem")
                    pattern = ForbiddenFamily::gem().pattern;
                else if (cert.claimed_family == "co-gem")
                    pattern = ForbiddenFamily::co_gem().pattern;
                else
                    return false;
                const VertexSet& w = *cert.witness;
                if (w.size() != 5) return false;
                std::set<int> distinct(w.begin(), w.end());
                if (distinct.size() != 5) return false;
                for (int v : w)
                    if (v < 0 || v >= g.order()) return false;
                return are_isomorphic(induced_subgraph(g, w), pattern);
            }
        }
        return false;
    } catch (...) {
        return false;
    }
}

// ---- JSON ----

namespace {

using ordered_json = nlohmann::ordered_json;

std::string claimed_string(const Certificate& c) {
    switch (c.verdict) {
        case Certificate::Verdict::yes:
            return {};
        case Certificate::Verdict::no:
            if (c.claimed_clique) return "K" + std::to_string(*c.claimed_clique);
            if (c.claimed_profile) {
                std::string s = "profile:";
                for (int i = 0; i < 5; ++i)
                    s += (i ? "," : "") + std::to_string((*c.claimed_profile)[i]);
                return s;
            }
            return {};
        case Certificate::Verdict::out_of_class:
            return c.claimed_family;
    }
    return {};
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
    ordered_json j;
    switch (cert.verdict) {
        case Certificate::Verdict::yes:
            j["verdict"] = "yes";
            break;
        case Certificate::Verdict::no:
            j["verdict"] = "no";
            break;
        case Certificate::Verdict::out_of_class:
            j["verdict"] = "out_of_class";
            break;
    }
    j["k"] = cert.k;
    if (cert.coloring)
        j["coloring"] = cert.coloring->assignment;
    else
        j["coloring"] = nullptr;
    if (cert.witness)
        j["witness"] = *cert.witness;
    else
        j["witness"] = nullptr;
    const std::string claimed = claimed_string(cert);
    if (claimed.empty())
        j["claimed"] = nullptr;
    else
        j["claimed"] = claimed;
    return j.dump();
}

namespace {

Certificate certificate_from_json_impl(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("certificate: invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::runtime_error("certificate: not a JSON object");
    for (const char* key : {"verdict", "k", "coloring", "witness", "claimed"})
        if (!j.contains(key))
            throw std::runtime_error(std::string("certificate: missing field ") + key);

    Certificate cert;
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "yes")
        cert.verdict = Certificate::Verdict::yes;
    else if (verdict == "no")
        cert.verdict = Certificate::Verdict::no;
    else if (verdict == "out_of_class")
        cert.verdict = Certificate::Verdict::out_of_class;
    else
        throw std::runtime_error("certificate: unknown verdict " + verdict);

    if (!j.at("k").is_number_integer()) throw std::runtime_error("certificate: k not an integer");
    cert.k = j.at("k").get<int>();

    if (!j.at("coloring").is_null()) {
        Coloring c;
        c.k = cert.k;
        c.assignment = j.at("coloring").get<std::vector<int>>();
        cert.coloring = std::move(c);
    }
    if (!j.at("witness").is_null()) cert.witness = j.at("witness").get<std::vector<int>>();

    if (!j.at("claimed").is_null()) {
        const std::string claimed = j.at("claimed").get<std::string>();
        if (claimed == "gem" || claimed == "co-gem") {
            cert.claimed_family = claimed;
        } else if (claimed.starts_with("K")) {
            cert.claimed_clique = std::stoi(claimed.substr(1));
        } else if (claimed.starts_with("profile:")) {
            ExpansionProfile p{};
            std::string rest = claimed.substr(8);
            std::size_t pos = 0;
            for (int i = 0; i < 5; ++i) {
                std::size_t used = 0;
                p[i] = std::stoi(rest.substr(pos), &used);
                pos += used;
                if (i < 4) {
                    if (pos >= rest.size() || rest[pos] != ',')
                        throw std::runtime_error("certificate: malformed profile claim");
                    ++pos;
                }
            }
            if (pos != rest.size()) throw std::runtime_error("certificate: malformed profile claim");
            cert.claimed_profile = p;
        } else {
            throw std::runtime_error("certificate: unknown claim " + claimed);
        }
    }
    return cert;
}

}  // namespace

Certificate certificate_from_json(const std::string& text) {
    try {
        return certificate_from_json_impl(text);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        // wrong JSON types, unparsable numbers and friends all land here
        throw std::runtime_error(std::string("certificate: malformed document: ") + e.what());
    }
}

}  // namespace vcrit
