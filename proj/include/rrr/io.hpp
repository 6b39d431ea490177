#ifndef RRR_IO_HPP
#define RRR_IO_HPP

#include <string>
#include <string_view>

#include "rrr/graph.hpp"

namespace rrr {

enum class GraphFormat { EdgeList, Graph6 };

// Edge-list text: first line "n m", then m lines "u v" with 0-based indices.
// '#' starts a comment that runs to end of line; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6, per the standard format: for n < 63 a single header byte 63+n,
// for 63 <= n <= 258047 a '~' byte followed by three bytes carrying n in
// big-endian 6-bit groups; then the upper triangle x(0,1), x(0,2), x(1,2),
// x(0,3), ... packed 6 bits per byte, MSB first, each byte offset by 63.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

Graph parse_graph(std::string_view content, GraphFormat fmt);
std::string render_graph(const Graph& g, GraphFormat fmt);

}  // namespace rrr

#endif
