#ifndef ELC_GRAPH_HPP_
#define ELC_GRAPH_HPP_

// Simple undirected graphs stored as symmetric GF(2) bit matrices, together
// with local complementation (LC), edge local complementation (ELC) and the
// bipartite pivot shortcut.
//
// Vertices are 0-indexed. Row v of the adjacency matrix is a single 64-bit
// word whose bit w is set iff {v, w} is an edge, so most operations reduce to
// masked XORs over a handful of rows.

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace elc {

using Row = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Row vertex_bit(int v) { return Row{1} << v; }

constexpr Row low_mask(int n) {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

constexpr Side opposite(Side s) {
  return s == Side::kLeft ? Side::kRight : Side::kLeft;
}

// Per-vertex assignment to one of two sides. Stored as the mask of Right
// vertices.
class Coloring {
 public:
  Coloring() = default;
  // All vertices Left.
  explicit Coloring(int n);
  Coloring(int n, Row right_mask);
  static Coloring from_sides(std::span<const Side> sides);

  int size() const { return n_; }
  Side side(int v) const {
    return (right_ >> v) & 1 ? Side::kRight : Side::kLeft;
  }
  Row right_mask() const { return right_; }
  Row left_mask() const { return low_mask(n_) & ~right_; }
  Row mask(Side s) const { return s == Side::kLeft ? left_mask() : right_mask(); }
  int count(Side s) const { return std::popcount(mask(s)); }

  // Exchanges Left and Right on every vertex.
  Coloring swapped() const { return Coloring(n_, left_mask()); }
  // Exchanges the sides of vertices u and v.
  Coloring with_swapped_vertices(int u, int v) const;
  Coloring relabeled(std::span<const int> perm) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  int n_ = 0;
  Row right_ = 0;
};

// Immutable simple undirected graph on at most 64 vertices.
class Graph {
 public:
  // The graph with no vertices.
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);

  // Throws InvalidArgument on self-loops, repeated edges or indices out of
  // range.
  static Graph from_edges(int n, std::span<const Edge> edges);
  // Rows must be symmetric, zero on the diagonal and zero above bit n.
  static Graph from_rows(int n, std::span<const Row> rows);

  int order() const { return n_; }
  Row neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;
  // Edges with u < v, sorted.
  std::vector<Edge> edges() const;
  std::span<const Row> rows() const { return {rows_.data(), std::size_t(n_)}; }
  Row vertex_mask() const { return low_mask(n_); }

  // Returns the graph where vertex v is renamed perm[v]. perm must be a
  // permutation of 0..n-1.
  Graph relabeled(std::span<const int> perm) const;
  // Exchanges the labels of u and v.
  Graph with_swapped_labels(int u, int v) const;
  Graph with_edge_toggled(int u, int v) const;
  // Appends vertex n joined to every vertex in `neighborhood`.
  Graph with_added_vertex(Row neighborhood) const;

  std::size_t hash() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend class GraphEditor;

  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

// Throws InvalidArgument unless 0 <= v < g.order().
void check_vertex(const Graph& g, int v);
// Throws InvalidArgument unless {e.u, e.v} is an edge of g.
void check_edge(const Graph& g, Edge e);

// G*v: complements the subgraph induced on the neighborhood of v.
Graph local_complement(const Graph& g, int v);

// ELC on {u,v} as the LC composition G*u*v*u.
Graph elc_via_lc(const Graph& g, Edge e);

// ELC on {u,v} by toggling every pair drawn from two different classes among
// A (adjacent to u only), B (adjacent to v only) and C (adjacent to both),
// then exchanging the labels of u and v.
Graph elc_classes(const Graph& g, Edge e);

// ELC restricted to bipartite graphs: toggles N_u\{v} x N_v\{u} with row XORs
// and exchanges u and v. Throws InvalidArgument if g is not bipartite.
Graph pivot_bipartite(const Graph& g, Edge e);

// elc_classes without the final label exchange. On the graph of a standard
// form generator matrix this is the coordinate-swapping pivot that keeps the
// code in standard form.
Graph elc_toggle_only(const Graph& g, Edge e);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Two-coloring with no monochromatic edge, or nullopt if g has an odd cycle.
// The lowest vertex of each component is Left.
std::optional<Coloring> bipartition(const Graph& g);

// True if no edge joins two vertices of the same side.
bool is_proper_coloring(const Graph& g, const Coloring& c);

// Subgraph induced on `vertices`; vertices[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Coloring restrict_coloring(const Coloring& c, std::span<const int> vertices);

}  // namespace elc

template <>
struct std::hash<elc::Graph> {
  std::size_t operator()(const elc::Graph& g) const noexcept { return g.hash(); }
};

#endif  // ELC_GRAPH_HPP_
