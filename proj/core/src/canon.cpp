#include "elc/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "elc/errors.hpp"

namespace elc {
namespace {

using Order = std::array<int, kMaxVertices>;
using PermutedRows = std::array<Row, kMaxVertices>;

constexpr std::size_t kMaxGenerators = 128;

// Ordered partition of the vertex set; cells[i] is a vertex mask.
struct Partition {
  int count = 0;
  std::array<Row, kMaxVertices> cells{};
};

// Refines `p` until it is equitable. `queue` is a mask of cell indices still
// to be used as splitters. Every decision depends only on cell positions and
// neighbor counts, never on vertex labels.
void refine(const Graph& g, Partition& p, Row queue) {
  const int n = g.order();
  std::array<Row, kMaxVertices + 1> by_count;
  std::array<int, kMaxVertices> counts;
  while (queue && p.count < n) {
    const int s = std::countr_zero(queue);
    queue &= queue - 1;
    const Row splitter = p.cells[s];
    for (int i = 0; i < p.count; ++i) {
      const Row cell = p.cells[i];
      if (!(cell & (cell - 1))) continue;
      int lo = kMaxVertices + 1;
      int hi = -1;
      for (Row m = cell; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        const int c = std::popcount(g.neighbors(v) & splitter);
        counts[v] = c;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (lo == hi) continue;
      std::fill(by_count.begin() + lo, by_count.begin() + hi + 1, Row{0});
      for (Row m = cell; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        by_count[counts[v]] |= vertex_bit(v);
      }
      int fragments = 0;
      for (int c = lo; c <= hi; ++c) fragments += by_count[c] != 0;
      // Shift cells after i to make room.
      for (int k = p.count - 1; k > i; --k) p.cells[k + fragments - 1] = p.cells[k];
      const Row before = queue & low_mask(i + 1);
      const Row after = queue & ~low_mask(i + 1);
      queue = before | (after << (fragments - 1));
      int at = i;
      for (int c = lo; c <= hi; ++c) {
        if (by_count[c]) {
          p.cells[at] = by_count[c];
          queue |= vertex_bit(at);
          ++at;
        }
      }
      p.count += fragments - 1;
      i = at - 1;
    }
  }
}

struct Leaf {
  PermutedRows rows{};
  Order order{};
  std::vector<int> path;
};

class Search {
 public:
  Search(const Graph& g, bool prune) : g_(g), n_(g.order()), prune_(prune) {}

  void run(Partition root) {
    refine(g_, root, low_mask(root.count));
    descend(root, 0);
  }

  const Leaf& best() const { return best_; }

 private:
  static constexpr int kNoJump = -1;

  // Returns kNoJump, or the level whose children should be resumed because
  // the rest of the current subtree is an automorphic image of explored
  // leaves.
  int descend(const Partition& p, int level) {
    if (p.count == n_) return leaf(p);
    int target = -1;
    int target_size = kMaxVertices + 1;
    for (int i = 0; i < p.count; ++i) {
      const int size = std::popcount(p.cells[i]);
      if (size > 1 && size < target_size) {
        target = i;
        target_size = size;
      }
    }
    const Row cell = p.cells[target];
    std::vector<int> explored;
    for (Row m = cell; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      if (prune_ && !explored.empty() && same_orbit_as_explored(w, explored)) continue;
      explored.push_back(w);

      Partition child = p;
      for (int k = child.count - 1; k > target; --k) child.cells[k + 1] = child.cells[k];
      child.cells[target] = vertex_bit(w);
      child.cells[target + 1] = cell & ~vertex_bit(w);
      ++child.count;
      refine(g_, child, vertex_bit(target));

      path_.push_back(w);
      const int jump = descend(child, level + 1);
      path_.pop_back();
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const Partition& p) {
    Leaf cur;
    Order position{};
    for (int i = 0; i < n_; ++i) {
      const int v = std::countr_zero(p.cells[i]);
      cur.order[i] = v;
      position[v] = i;
    }
    for (int i = 0; i < n_; ++i) {
      Row r = 0;
      for (Row m = g_.neighbors(cur.order[i]); m; m &= m - 1) {
        r |= Row{1} << (63 - position[std::countr_zero(m)]);
      }
      cur.rows[i] = r;
    }
    if (!have_first_) {
      cur.path = path_;
      first_ = cur;
      best_ = std::move(cur);
      have_first_ = true;
      return kNoJump;
    }
    if (!prune_) {
      if (less(cur, best_)) {
        cur.path = path_;
        best_ = std::move(cur);
      }
      return kNoJump;
    }
    if (equal(cur, first_)) return record_automorphism(first_, cur);
    if (equal(cur, best_)) return record_automorphism(best_, cur);
    if (less(cur, best_)) {
      cur.path = path_;
      best_ = std::move(cur);
    }
    return kNoJump;
  }

  bool less(const Leaf& a, const Leaf& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a.rows[i] != b.rows[i]) return a.rows[i] < b.rows[i];
    }
    return false;
  }
  bool equal(const Leaf& a, const Leaf& b) const {
    return std::equal(a.rows.begin(), a.rows.begin() + n_, b.rows.begin());
  }

  // `cur` relabels to the same graph as `ref`, so ref.order[i] -> cur.order[i]
  // is an automorphism. Returns the level of the deepest common ancestor.
  int record_automorphism(const Leaf& ref, const Leaf& cur) {
    if (generators_.size() < kMaxGenerators) {
      Order gamma{};
      for (int i = 0; i < n_; ++i) gamma[ref.order[i]] = cur.order[i];
      generators_.push_back(gamma);
    }
    int common = 0;
    while (common < int(ref.path.size()) && common < int(path_.size()) &&
           ref.path[common] == path_[common]) {
      ++common;
    }
    return common;
  }

  // Orbits of the group generated by the stored automorphisms that fix the
  // current path pointwise.
  bool same_orbit_as_explored(int w, const std::vector<int>& explored) const {
    Order parent;
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Order& gamma : generators_) {
      bool fixes = true;
      for (int v : path_) {
        if (gamma[v] != v) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    const int root = find(w);
    for (int e : explored) {
      if (find(e) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  const int n_;
  const bool prune_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<int> path_;
  std::vector<Order> generators_;
};

Partition initial_partition(const Graph& g, const std::optional<Coloring>& coloring) {
  Partition p;
  if (g.order() == 0) return p;
  if (!coloring) {
    p.cells[p.count++] = g.vertex_mask();
    return p;
  }
  if (coloring->size() != g.order()) {
    throw InvalidArgument("coloring length " + std::to_string(coloring->size()) +
                          " does not match vertex count " + std::to_string(g.order()));
  }
  if (coloring->left_mask()) p.cells[p.count++] = coloring->left_mask();
  if (coloring->right_mask()) p.cells[p.count++] = coloring->right_mask();
  return p;
}

std::string encode_key(int n, const std::optional<Coloring>& coloring,
                       const PermutedRows& rows) {
  std::string key;
  key.reserve(3 + (n * (n - 1) / 2 + 7) / 8);
  key.push_back(char(n));
  key.push_back(char(coloring ? 1 : 0));
  key.push_back(char(coloring ? coloring->count(Side::kLeft) : 0));
  unsigned acc = 0;
  int used = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | unsigned((rows[i] >> (63 - j)) & 1);
      if (++used == 8) {
        key.push_back(char(acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used) key.push_back(char(acc << (8 - used)));
  return key;
}

Leaf run_search(const Graph& g, const std::optional<Coloring>& coloring,
                CanonOptions options) {
  Search search(g, options.prune_automorphisms);
  search.run(initial_partition(g, coloring));
  return search.best();
}

}  // namespace

Graph CanonicalForm::graph() const {
  const int n = order();
  std::vector<Row> rows(n, 0);
  std::size_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      const auto byte = static_cast<unsigned char>(bytes_[3 + k / 8]);
      if ((byte >> (7 - k % 8)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  return Graph::from_rows(n, rows);
}

std::optional<Coloring> CanonicalForm::coloring() const {
  if (!colored()) return std::nullopt;
  const int n = order();
  const int left = static_cast<unsigned char>(bytes_[2]);
  return Coloring(n, low_mask(n) & ~low_mask(left));
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes_) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

CanonicalLabeling canonical_form(const Graph& g, const std::optional<Coloring>& coloring,
                                 CanonOptions options) {
  const Leaf best = run_search(g, coloring, options);
  CanonicalLabeling out;
  out.relabeling.resize(g.order());
  for (int i = 0; i < g.order(); ++i) out.relabeling[best.order[i]] = i;
  out.form = CanonicalForm(encode_key(g.order(), coloring, best.rows));
  return out;
}

CanonicalForm canonical_key(const Graph& g, const std::optional<Coloring>& coloring,
                            CanonOptions options) {
  const Leaf best = run_search(g, coloring, options);
  return CanonicalForm(encode_key(g.order(), coloring, best.rows));
}

bool is_isomorphic(const Graph& g, const Graph& h, const std::optional<Coloring>& cg,
                   const std::optional<Coloring>& ch) {
  if (cg.has_value() != ch.has_value()) {
    throw InvalidArgument("is_isomorphic needs both colorings or neither");
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  return canonical_key(g, cg) == canonical_key(h, ch);
}

}  // namespace elc
