#include "elc/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "elc/errors.hpp"

namespace elc {

DisconnectedGraph::DisconnectedGraph(std::vector<std::vector<int>> components)
    : Error([&] {
        std::ostringstream os;
        os << "graph is disconnected: " << components.size() << " components";
        for (const auto& comp : components) {
          os << " {";
          for (std::size_t i = 0; i < comp.size(); ++i) {
            os << (i ? "," : "") << comp[i] + 1;
          }
          os << "}";
        }
        return os.str();
      }()),
      components_(std::move(components)) {}

// Mutable access to a Graph under construction. Only used inside the library
// to build results; published graphs are never modified.
class GraphEditor {
 public:
  explicit GraphEditor(Graph& g) : g_(g) {}
  Row& row(int v) { return g_.rows_[v]; }
  void toggle(int u, int v) {
    g_.rows_[u] ^= vertex_bit(v);
    g_.rows_[v] ^= vertex_bit(u);
  }
  void swap_labels(int u, int v) {
    if (u == v) return;
    std::swap(g_.rows_[u], g_.rows_[v]);
    const Row mu = vertex_bit(u);
    const Row mv = vertex_bit(v);
    for (int x = 0; x < g_.n_; ++x) {
      Row& r = g_.rows_[x];
      if (((r >> u) ^ (r >> v)) & 1) r ^= mu | mv;
    }
  }

 private:
  Graph& g_;
};

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) +
                          " outside [0, 64]");
  }
}

// Toggles every pair {x, y} with x in `from` and y in `to`, for disjoint
// vertex sets.
void toggle_between(GraphEditor& ed, Row from, Row to) {
  for (Row m = from; m; m &= m - 1) {
    ed.row(std::countr_zero(m)) ^= to;
  }
  for (Row m = to; m; m &= m - 1) {
    ed.row(std::countr_zero(m)) ^= from;
  }
}

}  // namespace

Coloring::Coloring(int n) : Coloring(n, 0) {}

Coloring::Coloring(int n, Row right_mask) : n_(n), right_(right_mask) {
  check_order(n);
  if (right_mask & ~low_mask(n)) {
    throw InvalidArgument("coloring mask has bits beyond vertex count");
  }
}

Coloring Coloring::from_sides(std::span<const Side> sides) {
  Row right = 0;
  for (std::size_t v = 0; v < sides.size(); ++v) {
    if (sides[v] == Side::kRight) right |= vertex_bit(int(v));
  }
  return Coloring(int(sides.size()), right);
}

Coloring Coloring::with_swapped_vertices(int u, int v) const {
  Coloring out = *this;
  if (((right_ >> u) ^ (right_ >> v)) & 1) {
    out.right_ ^= vertex_bit(u) | vertex_bit(v);
  }
  return out;
}

Coloring Coloring::relabeled(std::span<const int> perm) const {
  Row right = 0;
  for (int v = 0; v < n_; ++v) {
    if ((right_ >> v) & 1) right |= vertex_bit(perm[v]);
  }
  return Coloring(n_, right);
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  GraphEditor ed(g);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InvalidArgument("edge {" + std::to_string(e.u + 1) + "," +
                            std::to_string(e.v + 1) +
                            "} references a vertex outside 1.." +
                            std::to_string(n));
    }
    if (e.u == e.v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (g.adjacent(e.u, e.v)) {
      throw InvalidArgument("repeated edge {" + std::to_string(e.u + 1) + "," +
                            std::to_string(e.v + 1) + "}");
    }
    ed.toggle(e.u, e.v);
  }
  return g;
}

Graph Graph::from_rows(int n, std::span<const Row> rows) {
  check_order(n);
  if (rows.size() != std::size_t(n)) {
    throw InvalidArgument("expected " + std::to_string(n) + " adjacency rows");
  }
  Graph g(n);
  const Row valid = low_mask(n);
  for (int v = 0; v < n; ++v) {
    if (rows[v] & ~valid) {
      throw InvalidArgument("adjacency row " + std::to_string(v + 1) +
                            " has bits beyond vertex count");
    }
    if ((rows[v] >> v) & 1) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(v + 1));
    }
    g.rows_[v] = rows[v];
  }
  for (int v = 0; v < n; ++v) {
    for (Row m = rows[v]; m; m &= m - 1) {
      if (!((rows[std::countr_zero(m)] >> v) & 1)) {
        throw InvalidArgument("adjacency matrix is not symmetric");
      }
    }
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (Row m = rows_[u] & ~low_mask(u + 1); m; m &= m - 1) {
      out.push_back({u, std::countr_zero(m)});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (perm.size() != std::size_t(n_)) {
    throw InvalidArgument("permutation length does not match vertex count");
  }
  Graph g(n_);
  for (int v = 0; v < n_; ++v) {
    Row r = 0;
    for (Row m = rows_[v]; m; m &= m - 1) {
      r |= vertex_bit(perm[std::countr_zero(m)]);
    }
    g.rows_[perm[v]] = r;
  }
  return g;
}

Graph Graph::with_swapped_labels(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  Graph g = *this;
  GraphEditor(g).swap_labels(u, v);
  return g;
}

Graph Graph::with_edge_toggled(int u, int v) const {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u + 1));
  Graph g = *this;
  GraphEditor(g).toggle(u, v);
  return g;
}

Graph Graph::with_added_vertex(Row neighborhood) const {
  if (n_ >= kMaxVertices) {
    throw InvalidArgument("graph already has the maximum of 64 vertices");
  }
  if (neighborhood & ~low_mask(n_)) {
    throw InvalidArgument("neighborhood references a vertex outside the graph");
  }
  Graph g = *this;
  g.n_ = n_ + 1;
  g.rows_[n_] = neighborhood;
  const Row bit = vertex_bit(n_);
  for (Row m = neighborhood; m; m &= m - 1) g.rows_[std::countr_zero(m)] |= bit;
  return g;
}

std::size_t Graph::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ std::uint64_t(n_);
  for (int v = 0; v < n_; ++v) {
    h ^= rows_[v] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return std::size_t(h);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ &&
         std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw InvalidArgument("vertex " + std::to_string(v + 1) +
                          " out of range 1.." + std::to_string(g.order()));
  }
}

void check_edge(const Graph& g, Edge e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (!g.adjacent(e.u, e.v)) {
    throw InvalidArgument("{" + std::to_string(e.u + 1) + "," +
                          std::to_string(e.v + 1) + "} is not an edge");
  }
}

Graph local_complement(const Graph& g, int v) {
  check_vertex(g, v);
  Graph out = g;
  GraphEditor ed(out);
  const Row nv = g.neighbors(v);
  for (Row m = nv; m; m &= m - 1) {
    const int x = std::countr_zero(m);
    ed.row(x) ^= nv & ~vertex_bit(x);
  }
  return out;
}

Graph elc_via_lc(const Graph& g, Edge e) {
  check_edge(g, e);
  return local_complement(local_complement(local_complement(g, e.u), e.v), e.u);
}

Graph elc_toggle_only(const Graph& g, Edge e) {
  check_edge(g, e);
  const Row nu = g.neighbors(e.u);
  const Row nv = g.neighbors(e.v);
  const Row ends = vertex_bit(e.u) | vertex_bit(e.v);
  const Row a = nu & ~nv & ~ends;
  const Row b = nv & ~nu & ~ends;
  const Row c = nu & nv;
  Graph out = g;
  GraphEditor ed(out);
  toggle_between(ed, a, b);
  toggle_between(ed, a, c);
  toggle_between(ed, b, c);
  return out;
}

Graph elc_classes(const Graph& g, Edge e) {
  Graph out = elc_toggle_only(g, e);
  GraphEditor(out).swap_labels(e.u, e.v);
  return out;
}

Graph pivot_bipartite(const Graph& g, Edge e) {
  check_edge(g, e);
  if (!bipartition(g)) {
    throw InvalidArgument("pivot_bipartite requires a bipartite graph");
  }
  Graph out = g;
  GraphEditor ed(out);
  const Row nu = g.neighbors(e.u) & ~vertex_bit(e.v);
  const Row nv = g.neighbors(e.v) & ~vertex_bit(e.u);
  toggle_between(ed, nu, nv);
  ed.swap_labels(e.u, e.v);
  return out;
}

namespace {

// Vertices reachable from `start`.
Row component_of(const Graph& g, int start) {
  Row seen = vertex_bit(start);
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    for (Row m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0) == g.vertex_mask();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  Row remaining = g.vertex_mask();
  while (remaining) {
    const Row comp = component_of(g, std::countr_zero(remaining));
    remaining &= ~comp;
    auto& list = out.emplace_back();
    for (Row m = comp; m; m &= m - 1) list.push_back(std::countr_zero(m));
  }
  return out;
}

std::optional<Coloring> bipartition(const Graph& g) {
  Row right = 0;
  Row remaining = g.vertex_mask();
  while (remaining) {
    const int root = std::countr_zero(remaining);
    Row side_left = vertex_bit(root);
    Row side_right = 0;
    Row frontier = side_left;
    bool frontier_is_left = true;
    Row seen = frontier;
    while (frontier) {
      Row next = 0;
      for (Row m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      // A neighbor of the frontier on the frontier's own side is an odd cycle.
      if (next & (frontier_is_left ? side_left : side_right)) return std::nullopt;
      next &= ~seen;
      (frontier_is_left ? side_right : side_left) |= next;
      seen |= next;
      frontier = next;
      frontier_is_left = !frontier_is_left;
    }
    right |= side_right;
    remaining &= ~seen;
  }
  return Coloring(g.order(), right);
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
  if (c.size() != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    const Row same = c.mask(c.side(v));
    if (g.neighbors(v) & same) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int m = int(vertices.size());
  std::vector<Row> rows(m, 0);
  for (int i = 0; i < m; ++i) {
    check_vertex(g, vertices[i]);
    for (int j = 0; j < m; ++j) {
      if (g.adjacent(vertices[i], vertices[j])) rows[i] |= vertex_bit(j);
    }
  }
  return Graph::from_rows(m, rows);
}

Coloring restrict_coloring(const Coloring& c, std::span<const int> vertices) {
  Row right = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (c.side(vertices[i]) == Side::kRight) right |= vertex_bit(int(i));
  }
  return Coloring(int(vertices.size()), right);
}

}  // namespace elc
