#pragma once

// graph6 encoding: order prefix + upper triangle of the adjacency matrix in
// column order, packed big-endian into 6-bit groups offset by 63.  Decoding
// is strict (bad characters, truncation, trailing bytes and nonzero padding
// are all distinct errors); the optional ">>graph6<<" header is tolerated.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vcrit/graph.hpp"

namespace vcrit {

struct graph6_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Largest order the 4-byte size form can express; the 8-byte form is not
// supported here.
inline constexpr int kGraph6MaxOrder = 258047;

std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view s);

// Newline-delimited streams of graph6 lines (blank lines skipped).
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace vcrit
