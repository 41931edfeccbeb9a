#include "elc/graph_io.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "elc/errors.hpp"

namespace elc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw InvalidArgument("bad " + std::string(what) + " '" +
                          std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(char(63 + n));
  } else {
    out.push_back('~');
    out.push_back(char(63 + ((n >> 12) & 63)));
    out.push_back(char(63 + ((n >> 6) & 63)));
    out.push_back(char(63 + (n & 63)));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | int(g.adjacent(i, j));
      if (++used == 6) {
        out.push_back(char(63 + acc));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used) out.push_back(char(63 + (acc << (6 - used))));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InvalidArgument("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) {
      throw InvalidArgument("graph6 byte out of range in '" + std::string(text) + "'");
    }
  }
  int n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw InvalidArgument("graph6 order too large for a 64-vertex graph");
    }
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw InvalidArgument("graph6 order " + std::to_string(n) + " exceeds 64");
  }
  const std::size_t bits = std::size_t(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw InvalidArgument("graph6 string has " + std::to_string(text.size() - pos) +
                          " data bytes, expected " + std::to_string(bytes));
  }
  std::vector<Row> rows(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= vertex_bit(j);
        rows[j] |= vertex_bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int tail = text.back() - 63;
    if (tail & ((1 << (6 - bits % 6)) - 1)) {
      throw InvalidArgument("graph6 padding bits are not zero");
    }
  }
  return Graph::from_rows(n, rows);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n=" << g.order() << "\n";
  for (const Edge& e : g.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text) {
  std::optional<int> declared;
  int max_label = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto body = trim(line.substr(1));
      if (body.starts_with("n=")) declared = parse_int(trim(body.substr(2)), "vertex count");
      continue;
    }
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) +
                            ": expected two labels");
    }
    const int u = parse_int(trim(line.substr(0, space)), "vertex label");
    const int v = parse_int(trim(line.substr(space)), "vertex label");
    if (u < 1 || v < 1) {
      throw InvalidArgument("edge list line " + std::to_string(line_no) +
                            ": labels are 1-based");
    }
    max_label = std::max({max_label, u, v});
    edges.push_back({u - 1, v - 1});
  }
  const int n = declared.value_or(max_label);
  if (n > kMaxVertices) {
    throw InvalidArgument("edge list has " + std::to_string(n) + " vertices, limit is 64");
  }
  return Graph::from_edges(n, edges);
}

std::string to_dot(const Graph& g, const std::optional<Coloring>& coloring) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    os << "  " << v + 1;
    if (coloring) {
      os << (coloring->side(v) == Side::kLeft
                 ? " [style=filled, fillcolor=lightblue]"
                 : " [style=filled, fillcolor=lightsalmon]");
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_adjacency_matrix(const Graph& g) {
  std::string out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) out.push_back(g.adjacent(u, v) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

Graph parse_adjacency_matrix(std::string_view text) {
  std::vector<std::string> rows;
  for (std::string_view line : split_lines(text)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::string bits;
    for (char ch : line) {
      if (ch == '0' || ch == '1') {
        bits.push_back(ch);
      } else if (ch != ' ' && ch != '\t') {
        throw InvalidArgument(std::string("unexpected character '") + ch +
                              "' in adjacency matrix");
      }
    }
    rows.push_back(std::move(bits));
  }
  const int n = int(rows.size());
  if (n > kMaxVertices) throw InvalidArgument("adjacency matrix larger than 64x64");
  std::vector<Row> adj(n, 0);
  for (int u = 0; u < n; ++u) {
    if (int(rows[u].size()) != n) {
      throw InvalidArgument("adjacency matrix row " + std::to_string(u + 1) +
                            " has length " + std::to_string(rows[u].size()) +
                            ", expected " + std::to_string(n));
    }
    for (int v = 0; v < n; ++v) {
      if (rows[u][v] == '1') adj[u] |= vertex_bit(v);
    }
  }
  return Graph::from_rows(n, adj);
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (t.starts_with(">>graph6<<")) {
      if (t.size() > 10) out.push_back(from_graph6(t.substr(10)));
      continue;
    }
    out.push_back(from_graph6(t));
  }
  return out;
}

}  // namespace elc
