#ifndef ELC_CENSUS_HPP_
#define ELC_CENSUS_HPP_

// Orbit classification drivers.
//
// classify_bipartite builds one representative per ELC orbit of connected
// bipartite graphs level by level: every representative on n-1 vertices is
// extended by a new vertex joined to a nonempty subset of one side, and the
// extensions are reduced to orbits. classify_stream does the same for an
// externally supplied exhaustive list of connected graphs, under LC or ELC.
//
// Candidates are canonicalized in parallel and deduplicated per hash shard;
// orbits are then expanded in batches and merged in candidate order. Output
// is sorted by orbit key, so results do not depend on the thread count.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "elc/canon.hpp"
#include "elc/graph.hpp"
#include "elc/orbit.hpp"

namespace elc {

enum class OrbitKind { kLc, kElc };

inline constexpr int kDefaultBipartiteLimit = 12;
inline constexpr int kDefaultStreamLimit = 9;

struct CensusOptions {
  int threads = 1;
  // Lifts kDefaultBipartiteLimit / kDefaultStreamLimit.
  bool allow_large = false;
  // LC mode: also split each LC orbit into its ELC orbits.
  bool refine_lc = false;
  OrbitOptions orbit;
};

struct RepEntry {
  // Canonically labeled member with the least uncolored key.
  Graph representative;
  CanonicalForm orbit_key;
  // Isomorphism classes in the orbit.
  std::size_t orbit_size = 0;
  // Bipartite orbits: side sizes of the representative's bipartition
  // (vertex 0 on the Left), least Left/Right degree over the orbit, and for
  // equal sides whether the Left and Right codes are equivalent.
  std::optional<int> left_size;
  std::optional<int> right_size;
  std::optional<int> min_degree_left;
  std::optional<int> min_degree_right;
  std::optional<bool> isodual;
  // LC orbits with refine_lc: the number of ELC orbits inside.
  std::optional<std::size_t> elc_orbits;
};

struct RepSet {
  int n = 0;
  OrbitKind kind = OrbitKind::kElc;
  bool bipartite = false;
  // False for sets read from files or built by hand; count_codes needs a
  // classification result.
  bool complete = false;
  std::vector<RepEntry> entries;
};

// All 2^a + 2^b - 2 one-vertex extensions; the new vertex is n and lands on
// the side opposite the subset it is joined to.
std::vector<std::pair<Graph, Coloring>> extend_bipartite(const Graph& g,
                                                         const Coloring& coloring);

// result[n-1] is the representative set on n vertices, n = 1..n_max.
std::vector<RepSet> classify_bipartite(int n_max, const CensusOptions& options = {});

// All graphs must be connected and of the same order.
RepSet classify_stream(std::span<const Graph> graphs, OrbitKind kind,
                       const CensusOptions& options = {});

// t_n = (c_n + sum_{k<n} c_k t_{n-k}) / n with c_n = sum_{d|n} d i_d.
// Throws InvalidArgument if some t_n is not an integer.
std::vector<std::int64_t> euler_transform(std::span<const std::int64_t> connected);

struct CodeCounts {
  int n = 0;
  // Inequivalent indecomposable codes of length n, by dimension (size n+1).
  std::vector<std::int64_t> by_dimension;
  std::int64_t indecomposable = 0;
  std::int64_t isodual = 0;
};

// Each orbit with sides a != b yields an [n,a] and an [n,b] code; a = b
// yields two codes unless they are equivalent (isodual). The one-vertex
// graph yields a single code.
CodeCounts count_codes(const RepSet& reps, const OrbitOptions& options = {});

// Header "# n=<n> orbits=<count>", then per orbit:
// graph6 orbit_size a b delta_left delta_right ("-" where not applicable).
void write_repset(std::ostream& out, const RepSet& reps);
RepSet read_repset(std::istream& in);

}  // namespace elc

#endif  // ELC_CENSUS_HPP_
