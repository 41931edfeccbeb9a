#ifndef ELC_ORBIT_HPP_
#define ELC_ORBIT_HPP_

// LC and ELC orbits of connected graphs.
//
// Unlabeled orbits are explored breadth first from the input, applying the
// operation at every vertex (LC) or edge (ELC) of every member and keeping
// one graph per isomorphism class. When a two-coloring is supplied the
// classes are color-preserving isomorphism classes and ELC carries the colors
// along: its label exchange also exchanges the sides of the two endpoints.
//
// All functions reject disconnected graphs with DisconnectedGraph.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "elc/canon.hpp"
#include "elc/graph.hpp"

namespace elc {

struct OrbitOptions {
  // Largest number of classes (or labeled graphs) to materialize; 0 means no
  // limit. Exceeding it throws GuardExceeded.
  std::size_t max_size = 0;
  CanonOptions canon;
};

struct OrbitReport {
  // Canonically labeled member with the least canonical key.
  Graph representative;
  std::optional<Coloring> representative_coloring;
  CanonicalForm orbit_key;
  // Number of isomorphism classes, ignoring colors.
  std::size_t size_unlabeled = 0;
  // Number of color-preserving isomorphism classes, for colored orbits.
  std::optional<std::size_t> size_colored;
  std::optional<std::size_t> size_labeled;
  // Least degree of a Left (Right) vertex over all members; colored orbits
  // with a nonempty side only.
  std::optional<int> min_degree_left;
  std::optional<int> min_degree_right;
};

struct Orbit {
  OrbitReport report;
  // One graph per class in discovery order; members[0] is the input.
  std::vector<Graph> members;
  // Parallel to members for colored orbits, empty otherwise.
  std::vector<Coloring> colorings;
  // Canonical key of each member (colored keys for colored orbits).
  std::vector<CanonicalForm> keys;
  // Uncolored keys of the members, deduplicated; equal to keys for
  // uncolored orbits.
  std::vector<CanonicalForm> uncolored_keys;
};

struct LabeledOrbit {
  std::size_t count = 0;
  // Discovery order; graphs[0] is the input.
  std::vector<Graph> graphs;
};

// Throws DisconnectedGraph unless g is connected.
void require_connected(const Graph& g);

Orbit elc_orbit_unlabeled(const Graph& g, const std::optional<Coloring>& coloring = {},
                          const OrbitOptions& options = {});

// Exact labeled graphs reachable by ELC (including its label exchange).
LabeledOrbit elc_orbit_labeled(const Graph& g, const OrbitOptions& options = {});

Orbit lc_orbit_unlabeled(const Graph& g, const OrbitOptions& options = {});

// The ELC orbits making up the LC orbit of g, ordered by orbit key. Their
// unlabeled sizes sum to the LC orbit size.
std::vector<OrbitReport> partition_lc_orbit(const Graph& g,
                                            const OrbitOptions& options = {});

// Least canonical key over the (colored) ELC orbit. Equal for two graphs iff
// they lie in the same orbit.
CanonicalForm orbit_canonical_rep(const Graph& g,
                                  const std::optional<Coloring>& coloring = {},
                                  const OrbitOptions& options = {});

// Least degree of a vertex on `side` over the colored ELC orbit of a
// connected bipartite graph. Throws InvalidArgument if the coloring is not a
// proper two-coloring of g or the side is empty.
int orbit_min_degree(const Graph& g, const Coloring& coloring, Side side,
                     const OrbitOptions& options = {});

// Orbit dump: a "# ..." header with the counts, then one graph6 string per
// line, the representative first.
void write_orbit_dump(std::ostream& out, const Orbit& orbit, const std::string& kind);
void write_labeled_orbit_dump(std::ostream& out, const LabeledOrbit& orbit);

}  // namespace elc

#endif  // ELC_ORBIT_HPP_
