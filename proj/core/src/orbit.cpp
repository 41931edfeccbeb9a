#include "elc/orbit.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include "elc/errors.hpp"
#include "elc/graph_io.hpp"

namespace elc {
namespace {

void check_cap(const OrbitOptions& options, std::size_t size) {
  if (options.max_size != 0 && size > options.max_size) {
    throw GuardExceeded("orbit exceeds the size cap of " +
                        std::to_string(options.max_size));
  }
}

struct Explorer {
  const OrbitOptions& options;
  Orbit orbit;
  std::unordered_set<CanonicalForm> seen;
  std::unordered_set<CanonicalForm> uncolored;

  bool add(const Graph& g, const std::optional<Coloring>& c) {
    CanonicalForm key = canonical_key(g, c, options.canon);
    if (!seen.insert(key).second) return false;
    check_cap(options, seen.size());
    orbit.members.push_back(g);
    if (c) {
      orbit.colorings.push_back(*c);
      CanonicalForm plain = canonical_key(g, std::nullopt, options.canon);
      if (uncolored.insert(plain).second) orbit.uncolored_keys.push_back(std::move(plain));
    }
    orbit.keys.push_back(std::move(key));
    return true;
  }

  void finish(bool colored) {
    auto& r = orbit.report;
    const auto& keys = orbit.keys;
    const auto least = std::min_element(keys.begin(), keys.end());
    r.orbit_key = *least;
    r.representative = least->graph();
    r.representative_coloring = least->coloring();
    if (!colored) {
      r.size_unlabeled = keys.size();
      orbit.uncolored_keys = keys;
      return;
    }
    r.size_colored = keys.size();
    r.size_unlabeled = uncolored.size();
    for (std::size_t i = 0; i < orbit.members.size(); ++i) {
      const Graph& g = orbit.members[i];
      const Coloring& c = orbit.colorings[i];
      for (int v = 0; v < g.order(); ++v) {
        auto& slot = c.side(v) == Side::kLeft ? r.min_degree_left : r.min_degree_right;
        slot = std::min(slot.value_or(g.degree(v)), g.degree(v));
      }
    }
  }
};

}  // namespace

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph(connected_components(g));
}

Orbit elc_orbit_unlabeled(const Graph& g, const std::optional<Coloring>& coloring,
                          const OrbitOptions& options) {
  require_connected(g);
  if (coloring && coloring->size() != g.order()) {
    throw InvalidArgument("coloring length does not match vertex count");
  }
  Explorer ex{options, {}, {}, {}};
  ex.add(g, coloring);
  for (std::size_t next = 0; next < ex.orbit.members.size(); ++next) {
    const Graph cur = ex.orbit.members[next];
    std::optional<Coloring> cur_color;
    if (coloring) cur_color = ex.orbit.colorings[next];
    for (const Edge& e : cur.edges()) {
      const Graph h = elc_classes(cur, e);
      if (cur_color) {
        ex.add(h, cur_color->with_swapped_vertices(e.u, e.v));
      } else {
        ex.add(h, std::nullopt);
      }
    }
  }
  ex.finish(coloring.has_value());
  return std::move(ex.orbit);
}

LabeledOrbit elc_orbit_labeled(const Graph& g, const OrbitOptions& options) {
  require_connected(g);
  LabeledOrbit out;
  std::unordered_set<Graph> seen{g};
  out.graphs.push_back(g);
  for (std::size_t next = 0; next < out.graphs.size(); ++next) {
    const Graph cur = out.graphs[next];
    for (const Edge& e : cur.edges()) {
      Graph h = elc_classes(cur, e);
      if (seen.insert(h).second) {
        check_cap(options, seen.size());
        out.graphs.push_back(std::move(h));
      }
    }
  }
  out.count = out.graphs.size();
  return out;
}

Orbit lc_orbit_unlabeled(const Graph& g, const OrbitOptions& options) {
  require_connected(g);
  Explorer ex{options, {}, {}, {}};
  ex.add(g, std::nullopt);
  for (std::size_t next = 0; next < ex.orbit.members.size(); ++next) {
    const Graph cur = ex.orbit.members[next];
    for (int v = 0; v < cur.order(); ++v) {
      if (cur.degree(v) < 2) continue;
      ex.add(local_complement(cur, v), std::nullopt);
    }
  }
  ex.finish(false);
  return std::move(ex.orbit);
}

std::vector<OrbitReport> partition_lc_orbit(const Graph& g, const OrbitOptions& options) {
  const Orbit lc = lc_orbit_unlabeled(g, options);
  std::unordered_set<CanonicalForm> covered;
  std::vector<OrbitReport> parts;
  for (std::size_t i = 0; i < lc.members.size(); ++i) {
    if (covered.contains(lc.keys[i])) continue;
    Orbit elc = elc_orbit_unlabeled(lc.members[i], std::nullopt, options);
    covered.insert(elc.keys.begin(), elc.keys.end());
    parts.push_back(std::move(elc.report));
  }
  std::sort(parts.begin(), parts.end(), [](const OrbitReport& a, const OrbitReport& b) {
    return a.orbit_key < b.orbit_key;
  });
  return parts;
}

CanonicalForm orbit_canonical_rep(const Graph& g, const std::optional<Coloring>& coloring,
                                  const OrbitOptions& options) {
  return elc_orbit_unlabeled(g, coloring, options).report.orbit_key;
}

int orbit_min_degree(const Graph& g, const Coloring& coloring, Side side,
                     const OrbitOptions& options) {
  if (!is_proper_coloring(g, coloring)) {
    throw InvalidArgument("coloring is not a bipartition of the graph");
  }
  if (coloring.count(side) == 0) {
    throw InvalidArgument("requested side has no vertices");
  }
  const Orbit orbit = elc_orbit_unlabeled(g, coloring, options);
  return side == Side::kLeft ? *orbit.report.min_degree_left
                             : *orbit.report.min_degree_right;
}

void write_orbit_dump(std::ostream& out, const Orbit& orbit, const std::string& kind) {
  const auto& r = orbit.report;
  out << "# " << kind << " orbit n=" << r.representative.order()
      << " size=" << r.size_unlabeled;
  if (r.size_colored) out << " colored_size=" << *r.size_colored;
  if (r.min_degree_left) out << " min_degree_left=" << *r.min_degree_left;
  if (r.min_degree_right) out << " min_degree_right=" << *r.min_degree_right;
  out << "\n" << to_graph6(r.representative) << "\n";
  // Remaining classes in discovery order, each in canonical labeling.
  for (const CanonicalForm& key : orbit.keys) {
    if (key == r.orbit_key) continue;
    out << to_graph6(key.graph()) << "\n";
  }
}

void write_labeled_orbit_dump(std::ostream& out, const LabeledOrbit& orbit) {
  out << "# elc labeled orbit n=" << (orbit.graphs.empty() ? 0 : orbit.graphs[0].order())
      << " size=" << orbit.count << "\n";
  for (const Graph& g : orbit.graphs) out << to_graph6(g) << "\n";
}

}  // namespace elc
