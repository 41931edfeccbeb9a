#include "elc/code.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "elc/errors.hpp"
#include "elc/gf2.hpp"

namespace elc {
namespace {

std::string dims(const GenMatrix& m) {
  return "[" + std::to_string(m.length()) + "," + std::to_string(m.dimension()) + "]";
}

// Code graph without the zero-coordinate restriction of code_to_graph. A zero
// coordinate becomes an isolated Right vertex.
CodeGraph bridge(const GenMatrix& m) {
  const StandardForm sf = standard_form(m);
  const int n = sf.length;
  const int k = sf.dimension;
  std::vector<Row> rows(n, 0);
  for (int i = 0; i < k; ++i) {
    for (Row bits = sf.p[i]; bits; bits &= bits - 1) {
      const int j = k + std::countr_zero(bits);
      rows[i] |= vertex_bit(j);
      rows[j] |= vertex_bit(i);
    }
  }
  CodeGraph out;
  out.graph = Graph::from_rows(n, rows);
  out.coloring = Coloring(n, low_mask(n) & ~low_mask(k));
  out.perm = sf.perm;
  return out;
}

void require_bridgeable(const GenMatrix& m) {
  require_full_rank(m);
  if (m.dimension() == 0 || m.dimension() == m.length()) {
    throw InvalidArgument("code " + dims(m) +
                          " has an empty side; the graph bridge needs 1 <= k < n");
  }
}

void require_indecomposable(const GenMatrix& m) {
  require_bridgeable(m);
  const auto comps = code_components(m);
  if (comps.size() > 1) {
    std::ostringstream os;
    os << "code " << dims(m) << " is decomposable into " << comps.size()
       << " components:";
    for (const auto& comp : comps) {
      os << " {";
      for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i] + 1;
      os << "}";
    }
    throw InvalidArgument(os.str());
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * unsigned(n - k + i) / unsigned(i);
    if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return std::uint64_t(r);
}

}  // namespace

GenMatrix::GenMatrix(int length, std::vector<Row> rows) : n_(length), rows_(std::move(rows)) {
  if (length < 0 || length > kMaxVertices) {
    throw InvalidArgument("code length " + std::to_string(length) + " outside [0, 64]");
  }
  for (Row r : rows_) {
    if (r & ~low_mask(length)) {
      throw InvalidArgument("generator row has bits beyond the code length");
    }
  }
}

int GenMatrix::rank() const { return gf2::rank(rows_, n_); }

GenMatrix GenMatrix::with_columns_permuted(const std::vector<int>& perm) const {
  if (int(perm.size()) != n_) throw InvalidArgument("permutation length mismatch");
  std::vector<Row> out(rows_.size(), 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (Row bits = rows_[i]; bits; bits &= bits - 1) {
      out[i] |= vertex_bit(perm[std::countr_zero(bits)]);
    }
  }
  return GenMatrix(n_, std::move(out));
}

GenMatrix StandardForm::matrix() const {
  std::vector<Row> rows(dimension);
  for (int i = 0; i < dimension; ++i) rows[i] = vertex_bit(i) | (p[i] << dimension);
  return GenMatrix(length, std::move(rows));
}

bool StandardForm::identity_permutation() const {
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] != int(i)) return false;
  }
  return true;
}

void require_full_rank(const GenMatrix& m) {
  const int r = m.rank();
  if (r != m.dimension()) {
    throw InvalidArgument("generator matrix has " + std::to_string(m.dimension()) +
                          " rows but rank " + std::to_string(r));
  }
}

StandardForm standard_form(const GenMatrix& m) {
  require_full_rank(m);
  const int n = m.length();
  const int k = m.dimension();
  const gf2::Echelon ech = gf2::reduce(m.rows(), n);
  StandardForm sf;
  sf.length = n;
  sf.dimension = k;
  sf.perm = ech.pivots;
  Row pivot_mask = 0;
  for (int c : ech.pivots) pivot_mask |= vertex_bit(c);
  for (int c = 0; c < n; ++c) {
    if (!(pivot_mask & vertex_bit(c))) sf.perm.push_back(c);
  }
  sf.p.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = k; j < n; ++j) {
      if ((ech.rows[i] >> sf.perm[j]) & 1) sf.p[i] |= vertex_bit(j - k);
    }
  }
  return sf;
}

CodeGraph code_to_graph(const GenMatrix& m) {
  require_bridgeable(m);
  Row used = 0;
  for (Row r : m.rows()) used |= r;
  const Row zero = low_mask(m.length()) & ~used;
  if (zero) {
    throw InvalidArgument("coordinate " + std::to_string(std::countr_zero(zero) + 1) +
                          " is zero in every codeword; the graph bridge needs nonzero columns");
  }
  return bridge(m);
}

GenMatrix graph_to_code(const Graph& g, Side side, const Coloring& coloring) {
  if (!is_proper_coloring(g, coloring)) {
    throw InvalidArgument("coloring is not a bipartition of the graph");
  }
  std::vector<int> info;
  std::vector<int> rest;
  for (int v = 0; v < g.order(); ++v) {
    (coloring.side(v) == side ? info : rest).push_back(v);
  }
  const int k = int(info.size());
  std::vector<Row> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    rows[i] = vertex_bit(i);
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (g.adjacent(info[i], rest[j])) rows[i] |= vertex_bit(k + int(j));
    }
  }
  return GenMatrix(g.order(), std::move(rows));
}

GenMatrix dual(const GenMatrix& m) {
  const StandardForm sf = standard_form(m);
  const int n = sf.length;
  const int k = sf.dimension;
  if (k == n) throw InvalidArgument("the dual of a code with k = n is the zero code");
  // (P^T | I) in standard coordinates, then position q -> coordinate perm[q].
  std::vector<Row> rows(n - k, 0);
  for (int j = 0; j < n - k; ++j) {
    Row r = vertex_bit(sf.perm[k + j]);
    for (int i = 0; i < k; ++i) {
      if ((sf.p[i] >> j) & 1) r |= vertex_bit(sf.perm[i]);
    }
    rows[j] = r;
  }
  return GenMatrix(n, std::move(rows));
}

bool same_code(const GenMatrix& a, const GenMatrix& b) {
  if (a.length() != b.length()) return false;
  return gf2::reduce(a.rows(), a.length()).rows == gf2::reduce(b.rows(), b.length()).rows;
}

int min_distance_bruteforce(const GenMatrix& m) {
  require_full_rank(m);
  const int k = m.dimension();
  if (k == 0) throw InvalidArgument("the zero code has no nonzero codeword");
  if (k > kMaxBruteForceDimension) {
    throw GuardExceeded("dimension " + std::to_string(k) +
                        " exceeds the brute-force limit of " +
                        std::to_string(kMaxBruteForceDimension));
  }
  int best = m.length() + 1;
  Row word = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= m.rows()[std::countr_zero(i)];
    best = std::min(best, std::popcount(word));
  }
  return best;
}

int min_distance_via_orbit(const GenMatrix& m, const OrbitOptions& options) {
  require_indecomposable(m);
  const CodeGraph cg = bridge(m);
  return orbit_min_degree(cg.graph, cg.coloring, Side::kLeft, options) + 1;
}

std::uint64_t information_sets_oracle(const GenMatrix& m, std::vector<Row>* sets) {
  require_full_rank(m);
  const int n = m.length();
  const int k = m.dimension();
  const std::uint64_t subsets = binomial(n, k);
  if (subsets > kMaxInfoSetSubsets) {
    throw GuardExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                        ") subsets exceed the enumeration limit");
  }
  std::vector<Row> columns(n);
  for (int j = 0; j < n; ++j) columns[j] = gf2::column(m.rows(), j);
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::uint64_t count = 0;
  std::vector<Row> chosen(k);
  while (true) {
    for (int i = 0; i < k; ++i) chosen[i] = columns[pick[i]];
    if (gf2::rank(chosen, k) == k) {
      ++count;
      if (sets) {
        Row mask = 0;
        for (int c : pick) mask |= vertex_bit(c);
        sets->push_back(mask);
      }
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

std::uint64_t information_sets_via_orbit(const GenMatrix& m, const OrbitOptions& options) {
  require_indecomposable(m);
  const CodeGraph cg = bridge(m);
  const std::uint64_t labeled = elc_orbit_labeled(cg.graph, options).count;
  return is_self_dual(m) ? 2 * labeled : labeled;
}

std::vector<CanonicalForm> equivalence_invariant(const GenMatrix& m,
                                                 const OrbitOptions& options) {
  require_full_rank(m);
  std::vector<CanonicalForm> out;
  if (m.dimension() == 0 || m.dimension() == m.length()) return out;
  const CodeGraph cg = bridge(m);
  for (const auto& comp : connected_components(cg.graph)) {
    const Graph sub = induced_subgraph(cg.graph, comp);
    const Coloring col = restrict_coloring(cg.coloring, comp);
    out.push_back(orbit_canonical_rep(sub, col, options));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_equivalent(const GenMatrix& a, const GenMatrix& b, const OrbitOptions& options) {
  require_full_rank(a);
  require_full_rank(b);
  if (a.length() != b.length() || a.dimension() != b.dimension()) return false;
  return equivalence_invariant(a, options) == equivalence_invariant(b, options);
}

bool is_self_dual(const GenMatrix& m) {
  require_full_rank(m);
  if (m.length() % 2 != 0 || 2 * m.dimension() != m.length()) return false;
  return same_code(m, dual(m));
}

bool is_isodual(const GenMatrix& m, const OrbitOptions& options) {
  require_full_rank(m);
  if (m.length() % 2 != 0 || 2 * m.dimension() != m.length()) return false;
  return are_equivalent(m, dual(m), options);
}

std::vector<std::vector<int>> code_components(const GenMatrix& m) {
  require_full_rank(m);
  if (m.dimension() == 0 || m.dimension() == m.length()) {
    std::vector<std::vector<int>> singles;
    for (int j = 0; j < m.length(); ++j) singles.push_back({j});
    return singles;
  }
  const CodeGraph cg = bridge(m);
  auto comps = connected_components(cg.graph);
  for (auto& comp : comps) {
    for (int& v : comp) v = cg.perm[v];
    std::sort(comp.begin(), comp.end());
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

bool is_indecomposable(const GenMatrix& m) {
  return code_components(m).size() == 1;
}

CodeSummary summarize(const GenMatrix& m) {
  require_full_rank(m);
  CodeSummary s;
  s.length = m.length();
  s.dimension = m.dimension();
  s.min_distance = min_distance_bruteforce(m);
  s.indecomposable = is_indecomposable(m);
  s.self_dual = is_self_dual(m);
  s.isodual = is_isodual(m);
  if (binomial(m.length(), m.dimension()) <= kMaxInfoSetSubsets) {
    s.info_set_count = information_sets_oracle(m);
  }
  return s;
}

GenMatrix parse_gen_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Row> rows;
  int width = -1;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Row r = 0;
    int len = 0;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        if (len == kMaxVertices) {
          throw InvalidArgument("matrix line " + std::to_string(line_no) +
                                ": more than 64 columns");
        }
        if (ch == '1') r |= vertex_bit(len);
        ++len;
      } else if (ch != ' ' && ch != '\t' && ch != '\r' && ch != '|') {
        throw InvalidArgument("matrix line " + std::to_string(line_no) +
                              ": unexpected character '" + std::string(1, ch) + "'");
      }
    }
    if (width >= 0 && len != width) {
      throw InvalidArgument("matrix line " + std::to_string(line_no) + " has " +
                            std::to_string(len) + " columns, expected " +
                            std::to_string(width));
    }
    width = len;
    rows.push_back(r);
  }
  if (width < 0) throw InvalidArgument("matrix has no rows");
  return GenMatrix(width, std::move(rows));
}

std::string format_gen_matrix(const GenMatrix& m) {
  std::string out;
  for (Row r : m.rows()) {
    for (int j = 0; j < m.length(); ++j) out.push_back((r >> j) & 1 ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

std::string format_standard_form(const StandardForm& sf) {
  std::ostringstream os;
  os << "# standard form [" << sf.length << "," << sf.dimension
     << "], column i holds original column:";
  for (int c : sf.perm) os << ' ' << c + 1;
  os << '\n' << format_gen_matrix(sf.matrix());
  return os.str();
}

}  // namespace elc
