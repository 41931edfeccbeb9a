#ifndef ELC_CANON_HPP_
#define ELC_CANON_HPP_

// Canonical labeling of (optionally two-colored) graphs.
//
// The search refines an ordered partition of the vertices (initial cells are
// the colors, cells are split by the number of neighbors in other cells) to
// an equitable one, then individualizes vertices of the first smallest
// non-singleton cell, lowest index first, until every cell is a singleton.
// Each discrete partition is a vertex ordering; the canonical labeling is the
// ordering whose relabeled adjacency matrix is lexicographically smallest
// when the upper triangle is read row by row.
//
// Automorphisms discovered at equivalent leaves prune the tree. The result
// does not depend on whether pruning is enabled.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elc/graph.hpp"

namespace elc {

// Key bytes: [n] [colored: 0/1] [number of Left vertices, 0 if uncolored]
// followed by the canonical upper triangle, row-major, 8 bits per byte, most
// significant bit first. Left vertices occupy the first positions of the
// canonical labeling, so the coloring is recoverable from the key.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : static_cast<unsigned char>(bytes_[0]); }
  bool colored() const { return bytes_.size() > 1 && bytes_[1] != 0; }

  // The canonically labeled graph encoded in the key.
  Graph graph() const;
  // Its coloring, if the key is colored.
  std::optional<Coloring> coloring() const;

  // Lowercase hex of the key bytes, for text output.
  std::string hex() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend std::strong_ordering operator<=>(const CanonicalForm& a,
                                          const CanonicalForm& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

struct CanonOptions {
  bool prune_automorphisms = true;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // relabeling[v] is the canonical position of input vertex v.
  std::vector<int> relabeling;
};

CanonicalLabeling canonical_form(const Graph& g,
                                 const std::optional<Coloring>& coloring = {},
                                 CanonOptions options = {});

// Same key as canonical_form without materializing the permutation.
CanonicalForm canonical_key(const Graph& g,
                            const std::optional<Coloring>& coloring = {},
                            CanonOptions options = {});

// Colored comparison when both colorings are given, uncolored when neither
// is. Supplying exactly one coloring throws InvalidArgument.
bool is_isomorphic(const Graph& g, const Graph& h,
                   const std::optional<Coloring>& cg = {},
                   const std::optional<Coloring>& ch = {});

}  // namespace elc

template <>
struct std::hash<elc::CanonicalForm> {
  std::size_t operator()(const elc::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};

#endif  // ELC_CANON_HPP_
