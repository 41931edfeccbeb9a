#include "elc/generate.hpp"

#include <algorithm>
#include <unordered_set>

#include "elc/canon.hpp"
#include "elc/errors.hpp"
#include "parallel.hpp"

namespace elc {
namespace {

struct Growth {
  std::size_t parent;
  Row neighborhood;
};

std::vector<Graph> grow(const std::vector<Graph>& level, const std::vector<Growth>& steps,
                        int threads) {
  std::vector<CanonicalForm> keys(steps.size());
  internal::parallel_for(steps.size(), threads, [&](std::size_t i) {
    keys[i] = canonical_key(level[steps[i].parent].with_added_vertex(steps[i].neighborhood));
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const CanonicalForm& k : keys) out.push_back(k.graph());
  return out;
}

void check_n(int n) {
  if (n < 1 || n > 16) {
    throw InvalidArgument("exhaustive generation supports 1 <= n <= 16, got " +
                          std::to_string(n));
  }
}

}  // namespace

std::vector<Graph> connected_graphs(int n, int threads) {
  check_n(n);
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Growth> steps;
    const Row all = low_mask(m - 1);
    for (std::size_t p = 0; p < level.size(); ++p) {
      for (Row s = 1; s <= all; ++s) steps.push_back({p, s});
    }
    level = grow(level, steps, threads);
  }
  return level;
}

std::vector<Graph> connected_bipartite_graphs(int n, int threads) {
  check_n(n);
  std::vector<Graph> level{Graph(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<Growth> steps;
    for (std::size_t p = 0; p < level.size(); ++p) {
      const Coloring c = *bipartition(level[p]);
      for (Side side : {Side::kLeft, Side::kRight}) {
        const Row pool = c.mask(side);
        for (Row s = (Row{0} - pool) & pool; s; s = (s - pool) & pool) steps.push_back({p, s});
      }
    }
    level = grow(level, steps, threads);
  }
  return level;
}

}  // namespace elc
