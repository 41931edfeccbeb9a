#include "elc/census.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "elc/code.hpp"
#include "elc/errors.hpp"
#include "elc/graph_io.hpp"
#include "parallel.hpp"

namespace elc {
namespace {

constexpr std::size_t kShards = 64;

struct Candidate {
  Graph graph;
  std::optional<Coloring> coloring;
};

struct Expanded {
  RepEntry entry;
  std::vector<CanonicalForm> member_keys;
};

std::size_t count_elc_orbits_within(const Orbit& lc, const OrbitOptions& options) {
  std::unordered_set<CanonicalForm> covered;
  std::size_t count = 0;
  for (std::size_t i = 0; i < lc.members.size(); ++i) {
    if (covered.contains(lc.keys[i])) continue;
    const Orbit elc = elc_orbit_unlabeled(lc.members[i], std::nullopt, options);
    covered.insert(elc.keys.begin(), elc.keys.end());
    ++count;
  }
  return count;
}

Expanded expand(const Candidate& cand, OrbitKind kind, const CensusOptions& options) {
  Expanded out;
  RepEntry& e = out.entry;
  if (kind == OrbitKind::kLc) {
    Orbit lc = lc_orbit_unlabeled(cand.graph, options.orbit);
    e.representative = lc.report.representative;
    e.orbit_key = lc.report.orbit_key;
    e.orbit_size = lc.report.size_unlabeled;
    if (options.refine_lc) e.elc_orbits = count_elc_orbits_within(lc, options.orbit);
    out.member_keys = std::move(lc.uncolored_keys);
    return out;
  }
  if (!cand.coloring) {
    Orbit elc = elc_orbit_unlabeled(cand.graph, std::nullopt, options.orbit);
    e.representative = elc.report.representative;
    e.orbit_key = elc.report.orbit_key;
    e.orbit_size = elc.report.size_unlabeled;
    out.member_keys = std::move(elc.uncolored_keys);
    return out;
  }

  Orbit elc = elc_orbit_unlabeled(cand.graph, cand.coloring, options.orbit);
  e.orbit_key = *std::min_element(elc.uncolored_keys.begin(), elc.uncolored_keys.end());
  e.representative = e.orbit_key.graph();
  e.orbit_size = elc.report.size_unlabeled;
  const Coloring rep_coloring = *bipartition(e.representative);
  e.left_size = rep_coloring.count(Side::kLeft);
  e.right_size = rep_coloring.count(Side::kRight);

  // The colored orbit was grown from the candidate's orientation; relate it
  // to the representative's.
  const std::unordered_set<CanonicalForm> colored(elc.keys.begin(), elc.keys.end());
  const bool same = colored.contains(canonical_key(e.representative, rep_coloring, options.orbit.canon));
  const bool flipped =
      colored.contains(canonical_key(e.representative, rep_coloring.swapped(), options.orbit.canon));
  if (same) {
    e.min_degree_left = elc.report.min_degree_left;
    e.min_degree_right = elc.report.min_degree_right;
  } else {
    e.min_degree_left = elc.report.min_degree_right;
    e.min_degree_right = elc.report.min_degree_left;
  }
  if (*e.left_size == *e.right_size) e.isodual = same && flipped;
  out.member_keys = std::move(elc.uncolored_keys);
  return out;
}

// Reduces `count` candidates (materialized on demand by `make`) to one entry
// per orbit.
template <typename Make>
std::vector<RepEntry> classify_candidates(std::size_t count, Make&& make, OrbitKind kind,
                                          const CensusOptions& options) {
  const int threads = std::max(options.threads, 1);

  // Map: canonical key of every candidate.
  std::vector<CanonicalForm> keys(count);
  internal::parallel_for(count, threads, [&](std::size_t i) {
    keys[i] = canonical_key(make(i).graph, std::nullopt, options.orbit.canon);
  });

  // Per-shard deduplication keeps the first candidate of each class.
  std::vector<std::vector<std::size_t>> shards(kShards);
  const std::hash<CanonicalForm> hasher;
  for (std::size_t i = 0; i < count; ++i) shards[hasher(keys[i]) % kShards].push_back(i);
  internal::parallel_for(kShards, threads, [&](std::size_t s) {
    std::unordered_set<CanonicalForm> seen;
    std::vector<std::size_t> kept;
    for (std::size_t i : shards[s]) {
      if (seen.insert(keys[i]).second) kept.push_back(i);
    }
    shards[s] = std::move(kept);
  });
  std::vector<std::size_t> unique;
  for (const auto& shard : shards) unique.insert(unique.end(), shard.begin(), shard.end());
  std::sort(unique.begin(), unique.end());

  // Orbit expansion in batches; a batch member whose class was reached by an
  // earlier orbit is discarded at merge time.
  std::unordered_set<CanonicalForm> covered;
  std::vector<RepEntry> entries;
  const std::size_t batch_size = std::size_t(threads);
  std::size_t pos = 0;
  std::vector<std::size_t> batch;
  std::vector<Expanded> results;
  while (pos < unique.size()) {
    batch.clear();
    while (pos < unique.size() && batch.size() < batch_size) {
      const std::size_t i = unique[pos++];
      if (!covered.contains(keys[i])) batch.push_back(i);
    }
    results.assign(batch.size(), {});
    internal::parallel_for(batch.size(), threads, [&](std::size_t b) {
      results[b] = expand(make(batch[b]), kind, options);
    });
    for (std::size_t b = 0; b < batch.size(); ++b) {
      if (covered.contains(keys[batch[b]])) continue;
      covered.insert(results[b].member_keys.begin(), results[b].member_keys.end());
      entries.push_back(std::move(results[b].entry));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const RepEntry& a, const RepEntry& b) { return a.orbit_key < b.orbit_key; });
  return entries;
}

std::string opt_field(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

}  // namespace

std::vector<std::pair<Graph, Coloring>> extend_bipartite(const Graph& g,
                                                         const Coloring& coloring) {
  if (g.order() >= kMaxVertices) {
    throw InvalidArgument("cannot extend a graph that already has 64 vertices");
  }
  if (!is_proper_coloring(g, coloring)) {
    throw InvalidArgument("coloring is not a bipartition of the graph");
  }
  const int n = g.order();
  std::vector<std::pair<Graph, Coloring>> out;
  for (Side side : {Side::kLeft, Side::kRight}) {
    const Row pool = coloring.mask(side);
    // The new vertex goes to the other side.
    const Row new_right = side == Side::kLeft ? vertex_bit(n) : 0;
    for (Row s = (Row{0} - pool) & pool; s; s = (s - pool) & pool) {
      out.emplace_back(g.with_added_vertex(s),
                       Coloring(n + 1, coloring.right_mask() | new_right));
    }
  }
  return out;
}

std::vector<RepSet> classify_bipartite(int n_max, const CensusOptions& options) {
  if (n_max < 1) throw InvalidArgument("census needs n >= 1");
  if (n_max > kDefaultBipartiteLimit && !options.allow_large) {
    throw GuardExceeded("bipartite census beyond n=" + std::to_string(kDefaultBipartiteLimit) +
                        " needs an explicit override");
  }
  std::vector<RepSet> levels;
  RepSet first;
  first.n = 1;
  first.kind = OrbitKind::kElc;
  first.bipartite = true;
  first.complete = true;
  RepEntry k1;
  k1.representative = Graph(1);
  k1.orbit_key = canonical_key(k1.representative);
  k1.orbit_size = 1;
  k1.left_size = 1;
  k1.right_size = 0;
  k1.min_degree_left = 0;
  first.entries.push_back(k1);
  levels.push_back(std::move(first));

  for (int n = 2; n <= n_max; ++n) {
    const RepSet& prev = levels.back();
    // Candidate i is (parent, neighborhood, side of the subset).
    struct Seed {
      std::size_t parent;
      Row subset;
      Side side;
    };
    std::vector<Coloring> parent_colorings;
    std::vector<Seed> seeds;
    for (std::size_t p = 0; p < prev.entries.size(); ++p) {
      const Coloring c = *bipartition(prev.entries[p].representative);
      parent_colorings.push_back(c);
      for (Side side : {Side::kLeft, Side::kRight}) {
        const Row pool = c.mask(side);
        for (Row s = (Row{0} - pool) & pool; s; s = (s - pool) & pool) {
          seeds.push_back({p, s, side});
        }
      }
    }
    auto make = [&](std::size_t i) {
      const Seed& seed = seeds[i];
      const Graph& parent = prev.entries[seed.parent].representative;
      const Row new_right = seed.side == Side::kLeft ? vertex_bit(n - 1) : 0;
      return Candidate{parent.with_added_vertex(seed.subset),
                       Coloring(n, parent_colorings[seed.parent].right_mask() | new_right)};
    };
    RepSet level;
    level.n = n;
    level.kind = OrbitKind::kElc;
    level.bipartite = true;
    level.complete = true;
    level.entries = classify_candidates(seeds.size(), make, OrbitKind::kElc, options);
    levels.push_back(std::move(level));
  }
  return levels;
}

RepSet classify_stream(std::span<const Graph> graphs, OrbitKind kind,
                       const CensusOptions& options) {
  RepSet out;
  out.kind = kind;
  out.complete = true;
  if (graphs.empty()) return out;
  out.n = graphs.front().order();
  if (out.n > kDefaultStreamLimit && !options.allow_large) {
    throw GuardExceeded("stream census beyond n=" + std::to_string(kDefaultStreamLimit) +
                        " needs an explicit override");
  }
  bool all_bipartite = true;
  for (const Graph& g : graphs) {
    if (g.order() != out.n) {
      throw InvalidArgument("stream mixes graphs on " + std::to_string(out.n) + " and " +
                            std::to_string(g.order()) + " vertices");
    }
    require_connected(g);
  }
  auto make = [&](std::size_t i) {
    Candidate c{graphs[i], std::nullopt};
    if (kind == OrbitKind::kElc) c.coloring = bipartition(graphs[i]);
    return c;
  };
  out.entries = classify_candidates(graphs.size(), make, kind, options);
  for (const RepEntry& e : out.entries) all_bipartite = all_bipartite && e.left_size.has_value();
  out.bipartite = kind == OrbitKind::kElc && all_bipartite;
  return out;
}

std::vector<std::int64_t> euler_transform(std::span<const std::int64_t> connected) {
  const std::size_t len = connected.size();
  std::vector<__int128> c(len + 1, 0);
  std::vector<__int128> t(len + 1, 0);
  for (std::size_t n = 1; n <= len; ++n) {
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d == 0) c[n] += __int128(d) * connected[d - 1];
    }
  }
  std::vector<std::int64_t> out;
  for (std::size_t n = 1; n <= len; ++n) {
    __int128 sum = c[n];
    for (std::size_t k = 1; k < n; ++k) sum += c[k] * t[n - k];
    if (sum % __int128(n) != 0) {
      throw InvalidArgument("Euler transform is not integral at n=" + std::to_string(n) +
                            "; the connected counts are inconsistent");
    }
    t[n] = sum / __int128(n);
    if (t[n] > INT64_MAX) throw InvalidArgument("Euler transform overflows 64 bits");
    out.push_back(std::int64_t(t[n]));
  }
  return out;
}

CodeCounts count_codes(const RepSet& reps, const OrbitOptions& options) {
  if (!reps.complete || !reps.bipartite || reps.kind != OrbitKind::kElc) {
    throw InvalidArgument("code counting needs a complete bipartite ELC classification");
  }
  CodeCounts out;
  out.n = reps.n;
  out.by_dimension.assign(reps.n + 1, 0);
  for (const RepEntry& e : reps.entries) {
    const int a = *e.left_size;
    const int b = *e.right_size;
    if (reps.n == 1) {
      out.by_dimension[1] += 1;
      out.indecomposable += 1;
      continue;
    }
    if (a != b) {
      out.by_dimension[a] += 1;
      out.by_dimension[b] += 1;
      out.indecomposable += 2;
      continue;
    }
    bool iso = false;
    if (e.isodual) {
      iso = *e.isodual;
    } else {
      const Coloring c = *bipartition(e.representative);
      iso = is_isodual(graph_to_code(e.representative, Side::kLeft, c), options);
    }
    out.by_dimension[a] += iso ? 1 : 2;
    out.indecomposable += iso ? 1 : 2;
    out.isodual += iso ? 1 : 0;
  }
  return out;
}

void write_repset(std::ostream& out, const RepSet& reps) {
  out << "# n=" << reps.n << " orbits=" << reps.entries.size() << "\n";
  for (const RepEntry& e : reps.entries) {
    out << to_graph6(e.representative) << ' ' << e.orbit_size << ' ' << opt_field(e.left_size)
        << ' ' << opt_field(e.right_size) << ' ' << opt_field(e.min_degree_left) << ' '
        << opt_field(e.min_degree_right) << "\n";
  }
}

RepSet read_repset(std::istream& in) {
  RepSet reps;
  std::string line;
  std::optional<std::size_t> declared;
  auto parse_opt = [](const std::string& tok) -> std::optional<int> {
    if (tok == "-") return std::nullopt;
    try {
      return std::stoi(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("bad RepSet field '" + tok + "'");
    }
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream hs(line.substr(1));
      std::string tok;
      while (hs >> tok) {
        if (tok.starts_with("n=")) reps.n = std::stoi(tok.substr(2));
        if (tok.starts_with("orbits=")) declared = std::stoull(tok.substr(7));
      }
      continue;
    }
    std::istringstream ls(line);
    std::string g6, size, a, b, dl, dr;
    if (!(ls >> g6 >> size >> a >> b >> dl >> dr)) {
      throw InvalidArgument("RepSet line needs 6 fields: '" + line + "'");
    }
    RepEntry e;
    e.representative = from_graph6(g6);
    e.orbit_key = canonical_key(e.representative);
    e.orbit_size = std::stoull(size);
    e.left_size = parse_opt(a);
    e.right_size = parse_opt(b);
    e.min_degree_left = parse_opt(dl);
    e.min_degree_right = parse_opt(dr);
    reps.entries.push_back(std::move(e));
  }
  if (declared && *declared != reps.entries.size()) {
    throw InvalidArgument("RepSet header declares " + std::to_string(*declared) +
                          " orbits but lists " + std::to_string(reps.entries.size()));
  }
  reps.bipartite = !reps.entries.empty() &&
                   std::all_of(reps.entries.begin(), reps.entries.end(),
                               [](const RepEntry& e) { return e.left_size.has_value(); });
  return reps;
}

}  // namespace elc
