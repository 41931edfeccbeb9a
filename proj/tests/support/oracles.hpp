#ifndef ELC_TESTS_ORACLES_HPP_
#define ELC_TESTS_ORACLES_HPP_

// Slow reference implementations. They use plain 0/1 matrices and share no
// code with the library beyond converting to and from Graph.

#include <cstdint>
#include <random>
#include <vector>

#include "elc/code.hpp"
#include "elc/graph.hpp"

namespace oracle {

using Mat = std::vector<std::vector<int>>;

Mat to_mat(const elc::Graph& g);
elc::Graph from_mat(const Mat& m);

// Def 1 applied literally.
Mat lc(const Mat& a, int v);
// G*u*v*u with lc above.
Mat elc(const Mat& a, int u, int v);

// Backtracking search for a color-preserving isomorphism. Empty color
// vectors mean uncolored.
bool isomorphic(const Mat& a, const Mat& b, const std::vector<int>& ca = {},
                const std::vector<int>& cb = {});

// Lexicographically least upper triangle over all n! relabelings, with the
// color vector (if any) compared first.
std::vector<int> brute_canon(const Mat& a, const std::vector<int>& colors = {});

bool connected(const Mat& a);

// Rank over GF(2) of 0/1 rows.
int rank(Mat rows);

// Code given as k rows of n bits.
Mat code_rows(const elc::GenMatrix& m);
int min_distance(const Mat& rows);
std::uint64_t information_sets(const Mat& rows);
bool same_row_space(const Mat& a, const Mat& b);

// Random inputs.
elc::Graph random_graph(std::mt19937_64& rng, int n, double p);
elc::Graph random_connected_graph(std::mt19937_64& rng, int n, double p);
// Connected bipartite graph with sides of size a (0..a-1) and b.
elc::Graph random_connected_bipartite(std::mt19937_64& rng, int a, int b, double p);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);
// Full-rank k x n matrix.
elc::GenMatrix random_code(std::mt19937_64& rng, int n, int k);

// All labeled graphs on n vertices (n <= 7) as 2^(n choose 2) masks.
elc::Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace oracle

#endif  // ELC_TESTS_ORACLES_HPP_
