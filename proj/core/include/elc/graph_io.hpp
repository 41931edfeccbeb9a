#ifndef ELC_GRAPH_IO_HPP_
#define ELC_GRAPH_IO_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elc/graph.hpp"

namespace elc {

// graph6: N(n) followed by the upper triangle, column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed 6 bits per byte with offset
// 63. n <= 62 uses one size byte; larger orders use the '~' + 3 byte form.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Edge list: one "u v" pair per line with 1-based labels. Lines starting
// with '#' are comments, except "# n=<count>" which fixes the vertex count
// (otherwise it is the largest label seen).
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

// Graphviz rendering with 1-based labels. Vertices are filled by side when a
// coloring is supplied.
std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring = {});

// n lines of n '0'/'1' characters.
std::string to_adjacency_matrix(const Graph& g);
Graph parse_adjacency_matrix(std::string_view text);

// Reads one graph6 string per non-empty line; lines starting with '#' or
// '>' (the ">>graph6<<" header) are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace elc

#endif  // ELC_GRAPH_IO_HPP_
