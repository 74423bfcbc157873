#include "vcrit/graph6.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace vcrit {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

long long triangle_bits(int n) { return (long long)n * (n - 1) / 2; }

int group_at(std::string_view s, std::size_t i) {
    unsigned char c = (unsigned char)s[i];
    if (c < 63 || c > 126)
        throw graph6_error("graph6: character out of range at position " + std::to_string(i));
    return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw graph6_error("graph6: order " + std::to_string(n) + " exceeds encodable maximum " +
                           std::to_string(kGraph6MaxOrder));
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        out.push_back(char(126));
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }

    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(char(63 + group));
                group = filled = 0;
            }
        }
    if (filled) out.push_back(char(63 + (group << (6 - filled))));
    return out;
}

Graph decode_graph6(std::string_view s) {
    if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
    if (s.empty()) throw graph6_error("graph6: empty string");

    std::size_t pos = 0;
    long long n;
    if (group_at(s, 0) < 63) {
        n = group_at(s, 0);
        pos = 1;
    } else {
        if (s.size() >= 2 && group_at(s, 1) == 63)
            throw graph6_error("graph6: 8-byte size form not supported");
        if (s.size() < 4) throw graph6_error("graph6: malformed size prefix");
        n = ((long long)group_at(s, 1) << 12) | (group_at(s, 2) << 6) | group_at(s, 3);
        pos = 4;
    }

    const long long bits = triangle_bits(int(n));
    const long long groups = (bits + 5) / 6;
    if ((long long)(s.size() - pos) < groups) throw graph6_error("graph6: truncated bit vector");
    if ((long long)(s.size() - pos) > groups)
        throw graph6_error("graph6: trailing characters after bit vector");

    Graph g{int(n)};
    long long bit = 0;
    for (long long i = 0; i < groups; ++i) {
        int grp = group_at(s, pos + std::size_t(i));
        for (int b = 5; b >= 0; --b, ++bit) {
            if (!((grp >> b) & 1)) continue;
            if (bit >= bits) throw graph6_error("graph6: nonzero padding bits");
            // column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
            long long r = bit;
            int v = 1;
            while (r >= v) r -= v++;
            g.add_edge(int(r), v);
        }
    }
    return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(decode_graph6(line));
    }
    return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph6_error("graph6: cannot open file " + path);
    return read_graph6(in);
}

void write_graph6(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace vcrit
