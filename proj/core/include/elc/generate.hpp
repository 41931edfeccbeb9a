#ifndef ELC_GENERATE_HPP_
#define ELC_GENERATE_HPP_

// Exhaustive lists of small connected graphs, one per isomorphism class, used
// as input streams for classify_stream. Level n is grown from level n-1 by
// adding a vertex with every admissible neighborhood and keeping one graph per
// canonical key; a connected graph always has a vertex whose removal leaves it
// connected, so nothing is missed.

#include <vector>

#include "elc/graph.hpp"

namespace elc {

// Connected graphs on n vertices in canonical labeling, sorted by key.
std::vector<Graph> connected_graphs(int n, int threads = 1);

// Connected bipartite graphs on n vertices, same conventions.
std::vector<Graph> connected_bipartite_graphs(int n, int threads = 1);

}  // namespace elc

#endif  // ELC_GENERATE_HPP_
