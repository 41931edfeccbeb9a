#ifndef ELC_CODE_HPP_
#define ELC_CODE_HPP_

// Binary linear codes and their bipartite graphs.
//
// A standard form generator (I | P) of an [n,k] code corresponds to the
// (k, n-k)-bipartite graph with biadjacency matrix P: vertices 0..k-1 are the
// information coordinates (Left), k..n-1 the redundancy coordinates (Right).
// Code equivalence, minimum distance and information sets are then computed
// from ELC orbits of that graph, with brute-force routes kept alongside.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elc/canon.hpp"
#include "elc/graph.hpp"
#include "elc/orbit.hpp"

namespace elc {

// k x n matrix over GF(2), n <= 64. Bit j of a row is coordinate j. Any rows
// are accepted; operations that need a generator matrix check the rank.
class GenMatrix {
 public:
  GenMatrix() = default;
  GenMatrix(int length, std::vector<Row> rows);

  int length() const { return n_; }
  int dimension() const { return int(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  bool bit(int row, int col) const { return (rows_[row] >> col) & 1; }

  int rank() const;
  bool full_rank() const { return rank() == dimension(); }
  // Coordinate j moves to position perm[j].
  GenMatrix with_columns_permuted(const std::vector<int>& perm) const;

  friend bool operator==(const GenMatrix&, const GenMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<Row> rows_;
};

// (I | P) after moving the columns listed in perm to the front.
struct StandardForm {
  int length = 0;
  int dimension = 0;
  // dimension rows of width length - dimension; bit j is column k + j.
  std::vector<Row> p;
  // perm[i] is the original coordinate placed at position i.
  std::vector<int> perm;

  GenMatrix matrix() const;
  bool identity_permutation() const;
};

struct CodeGraph {
  Graph graph;
  Coloring coloring;
  // Same as StandardForm::perm: vertex i is original coordinate perm[i].
  std::vector<int> perm;
};

struct CodeSummary {
  int length = 0;
  int dimension = 0;
  int min_distance = 0;
  bool indecomposable = false;
  bool self_dual = false;
  bool isodual = false;
  std::optional<std::uint64_t> info_set_count;
};

// Throws InvalidArgument if the rows are linearly dependent.
void require_full_rank(const GenMatrix& m);

StandardForm standard_form(const GenMatrix& m);

// Requires 1 <= k < n and no all-zero coordinate.
CodeGraph code_to_graph(const GenMatrix& m);

// (I | P) with the vertices on `side` (ascending) as information set and the
// other side (ascending) as the remaining coordinates.
GenMatrix graph_to_code(const Graph& g, Side side, const Coloring& coloring);

// Generator of the dual code in the original coordinates. Requires k < n.
GenMatrix dual(const GenMatrix& m);

// Row spaces are equal.
bool same_code(const GenMatrix& a, const GenMatrix& b);

inline constexpr int kMaxBruteForceDimension = 24;
inline constexpr std::uint64_t kMaxInfoSetSubsets = 10'000'000;

// Minimum weight over the 2^k - 1 nonzero codewords (Gray code order).
int min_distance_bruteforce(const GenMatrix& m);

// delta + 1, where delta is the least degree of an information-side vertex
// over the colored ELC orbit. Requires an indecomposable code.
int min_distance_via_orbit(const GenMatrix& m, const OrbitOptions& options = {});

// Number of k-subsets of coordinates whose columns have rank k. If `sets` is
// non-null the subsets are appended as coordinate masks.
std::uint64_t information_sets_oracle(const GenMatrix& m,
                                      std::vector<Row>* sets = nullptr);

// Size of the labeled ELC orbit, doubled for self-dual codes. Requires an
// indecomposable code.
std::uint64_t information_sets_via_orbit(const GenMatrix& m,
                                         const OrbitOptions& options = {});

// Equivalence under coordinate permutation, via orbit-canonical forms of the
// colored components of the two code graphs.
bool are_equivalent(const GenMatrix& a, const GenMatrix& b,
                    const OrbitOptions& options = {});

// Sorted colored orbit-canonical forms of the components of the code graph.
// Two full-rank generators with equal (n, k) are equivalent iff these match.
std::vector<CanonicalForm> equivalence_invariant(const GenMatrix& m,
                                                 const OrbitOptions& options = {});

bool is_self_dual(const GenMatrix& m);
bool is_isodual(const GenMatrix& m, const OrbitOptions& options = {});
bool is_indecomposable(const GenMatrix& m);

// Connected components of the code graph as sorted lists of original
// coordinates.
std::vector<std::vector<int>> code_components(const GenMatrix& m);

CodeSummary summarize(const GenMatrix& m);

// Text format: one row per line of '0'/'1' characters, whitespace ignored,
// '#' starts a comment line.
GenMatrix parse_gen_matrix(const std::string& text);
// Rows of '0'/'1' without comments.
std::string format_gen_matrix(const GenMatrix& m);
// Standard form rows preceded by a comment recording the 1-based column
// permutation.
std::string format_standard_form(const StandardForm& sf);

}  // namespace elc

#endif  // ELC_CODE_HPP_
