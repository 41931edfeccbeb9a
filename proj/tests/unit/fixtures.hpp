#ifndef ELC_TESTS_FIXTURES_HPP_
#define ELC_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <vector>

#include "elc/code.hpp"
#include "elc/graph.hpp"

namespace fixtures {

// 1-based edge list, as written in the examples.
inline elc::Graph graph1(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<elc::Edge> e;
  for (auto [u, v] : edges) e.push_back({u - 1, v - 1});
  return elc::Graph::from_edges(n, e);
}

// Rows written as 0/1 strings, leftmost character is coordinate 0.
inline elc::GenMatrix matrix(std::initializer_list<const char*> rows) {
  std::vector<elc::Row> out;
  int n = 0;
  for (const char* r : rows) {
    elc::Row bits = 0;
    int j = 0;
    for (const char* c = r; *c; ++c, ++j) {
      if (*c == '1') bits |= elc::vertex_bit(j);
    }
    n = j;
    out.push_back(bits);
  }
  return elc::GenMatrix(n, out);
}

inline elc::GenMatrix hamming() {
  return matrix({"1000011", "0100101", "0010110", "0001111"});
}

inline elc::GenMatrix hamming_swapped() {
  return matrix({"1000111", "0100101", "0010110", "0001011"});
}

inline elc::Graph hamming_graph() {
  return graph1(7, {{1, 6}, {1, 7}, {2, 5}, {2, 7}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {4, 7}});
}

inline elc::Coloring hamming_coloring() { return elc::Coloring(7, 0b1110000); }

inline elc::Graph path(int n) {
  std::vector<elc::Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return elc::Graph::from_edges(n, e);
}

inline elc::Graph cycle(int n) {
  std::vector<elc::Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return elc::Graph::from_edges(n, e);
}

inline elc::Graph star(int leaves) {
  std::vector<elc::Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return elc::Graph::from_edges(leaves + 1, e);
}

inline elc::Graph complete(int n) {
  std::vector<elc::Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return elc::Graph::from_edges(n, e);
}

}  // namespace fixtures

#endif  // ELC_TESTS_FIXTURES_HPP_
