#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "elc/census.hpp"
#include "elc/code.hpp"
#include "elc/errors.hpp"
#include "elc/generate.hpp"
#include "elc/graph_io.hpp"
#include "elc/orbit.hpp"

namespace elc::cli {
namespace {

struct Io {
  std::istream& in;
  std::ostream& out;
};

int default_threads() {
  if (const char* env = std::getenv("ELC_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" reads stdin, an existing path reads the file, anything else is taken
// as inline text.
std::string read_source(const std::string& arg, std::istream& in, bool allow_inline) {
  if (arg == "-") return slurp(in);
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    if (!f) throw InvalidArgument("cannot open '" + arg + "'");
    return slurp(f);
  }
  if (!allow_inline) throw InvalidArgument("no such file '" + arg + "'");
  return arg;
}

Graph read_graph(const std::string& arg, const std::string& format, std::istream& in) {
  const std::string text = read_source(arg, in, format == "graph6");
  if (format == "edges") return parse_edge_list(text);
  if (format == "matrix") return parse_adjacency_matrix(text);
  std::istringstream lines(text);
  const auto graphs = read_graph6_stream(lines);
  if (graphs.empty()) throw InvalidArgument("no graph6 string in '" + arg + "'");
  return graphs.front();
}

GenMatrix read_matrix(const std::string& arg, std::istream& in) {
  std::string text = read_source(arg, in, true);
  // Inline rows may be separated by ',' or ';'.
  for (char& ch : text) {
    if (ch == ',' || ch == ';') ch = '\n';
  }
  return parse_gen_matrix(text);
}

std::string render(const Graph& g, const std::string& to,
                   const std::optional<Coloring>& coloring = {}) {
  if (to == "edges") return to_edge_list(g);
  if (to == "dot") return to_dot(g, coloring);
  if (to == "matrix") return to_adjacency_matrix(g);
  return to_graph6(g) + "\n";
}

// Writes to `path` if set, otherwise to the command output.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write '" + path + "'");
  f << text;
}

std::string opt(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string("-");
}

// ---------------------------------------------------------------- pivot

struct PivotArgs {
  std::string graph;
  int u = 0;
  int v = 0;
  std::string def = "classes";
  bool no_swap = false;
  std::string format = "graph6";
  std::string to = "graph6";
  std::string output;
};

int run_pivot(const PivotArgs& a, Io io) {
  const Graph g = read_graph(a.graph, a.format, io.in);
  const Edge e{a.u - 1, a.v - 1};
  check_edge(g, e);
  Graph h;
  if (a.def == "lc-compose") {
    h = elc_via_lc(g, e);
  } else if (a.def == "bipartite") {
    h = pivot_bipartite(g, e);
  } else {
    h = elc_classes(g, e);
  }
  if (a.no_swap) h = h.with_swapped_labels(e.u, e.v);
  emit(a.output, render(h, a.to), io.out);
  return 0;
}

// ---------------------------------------------------------------- orbit

struct OrbitArgs {
  std::string graph;
  std::string format = "graph6";
  bool labeled = false;
  bool lc = false;
  bool stats = false;
  std::size_t cap = 0;
  std::string output;
};

int run_orbit(const OrbitArgs& a, Io io) {
  const Graph g = read_graph(a.graph, a.format, io.in);
  OrbitOptions options;
  options.max_size = a.cap;
  std::ostringstream dump;
  if (a.labeled) {
    const LabeledOrbit orbit = elc_orbit_labeled(g, options);
    if (a.stats) {
      io.out << "size_labeled=" << orbit.count << "\n";
      if (a.output.empty()) return 0;
    }
    write_labeled_orbit_dump(dump, orbit);
    emit(a.output, dump.str(), io.out);
    return 0;
  }
  const Orbit orbit = a.lc ? lc_orbit_unlabeled(g, options)
                           : elc_orbit_unlabeled(g, std::nullopt, options);
  write_orbit_dump(dump, orbit, a.lc ? "lc" : "elc");
  if (!a.stats) {
    emit(a.output, dump.str(), io.out);
    return 0;
  }
  if (!a.output.empty()) emit(a.output, dump.str(), io.out);
  io.out << "kind=" << (a.lc ? "lc" : "elc") << "\n";
  io.out << "size_unlabeled=" << orbit.report.size_unlabeled << "\n";
  io.out << "representative=" << to_graph6(orbit.report.representative) << "\n";
  if (!a.lc) {
    if (const auto coloring = bipartition(g)) {
      const Orbit colored = elc_orbit_unlabeled(g, coloring, options);
      io.out << "left_size=" << coloring->count(Side::kLeft) << "\n";
      io.out << "right_size=" << coloring->count(Side::kRight) << "\n";
      io.out << "min_degree_left=" << opt(colored.report.min_degree_left) << "\n";
      io.out << "min_degree_right=" << opt(colored.report.min_degree_right) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------- code

struct CodeArgs {
  std::string action;
  std::string matrix;
  std::string other;
  std::string method = "auto";
  std::string to = "graph6";
  std::string output;
};

int run_code(const CodeArgs& a, Io io) {
  const GenMatrix m = read_matrix(a.matrix, io.in);
  require_full_rank(m);
  std::ostringstream os;
  if (a.action == "mindist") {
    const bool orbit = a.method == "orbit" || (a.method == "auto" && m.dimension() > 0 &&
                                               m.dimension() < m.length() &&
                                               is_indecomposable(m));
    os << (orbit ? min_distance_via_orbit(m) : min_distance_bruteforce(m)) << "\n";
  } else if (a.action == "infosets") {
    const bool orbit = a.method == "orbit" || (a.method == "auto" && m.dimension() > 0 &&
                                               m.dimension() < m.length() &&
                                               is_indecomposable(m));
    os << (orbit ? information_sets_via_orbit(m) : information_sets_oracle(m)) << "\n";
  } else if (a.action == "equiv") {
    if (a.other.empty()) throw InvalidArgument("equiv needs a second matrix");
    const GenMatrix m2 = read_matrix(a.other, io.in);
    os << (are_equivalent(m, m2) ? "equivalent" : "not equivalent") << "\n";
  } else if (a.action == "dual") {
    os << format_standard_form(standard_form(dual(m)));
  } else if (a.action == "standard") {
    os << format_standard_form(standard_form(m));
  } else if (a.action == "graph") {
    const CodeGraph cg = code_to_graph(m);
    os << render(cg.graph, a.to, cg.coloring);
  } else if (a.action == "summary") {
    const CodeSummary s = summarize(m);
    os << "[" << s.length << "," << s.dimension << "," << s.min_distance << "]";
    if (s.self_dual) os << " self-dual";
    if (s.isodual) os << " isodual";
    os << (s.indecomposable ? " indecomposable" : " decomposable");
    if (s.info_set_count) os << " info_sets=" << *s.info_set_count;
    os << "\n";
  } else {
    throw InvalidArgument("unknown code action '" + a.action + "'");
  }
  emit(a.output, os.str(), io.out);
  return 0;
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  std::string mode;
  std::vector<std::string> inputs;
  bool codes = false;
  bool lc = false;
  bool refine = false;
  bool allow_large = false;
  int threads = 1;
  std::string out_dir;
  std::string output;
};

void write_repset_file(const std::string& dir, const std::string& name, const RepSet& reps) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
  if (!f) throw InvalidArgument("cannot write RepSet into '" + dir + "'");
  write_repset(f, reps);
}

int run_census(const CensusArgs& a, Io io) {
  CensusOptions options;
  options.threads = a.threads;
  options.allow_large = a.allow_large;
  options.refine_lc = a.refine;
  std::ostringstream table;

  if (a.mode == "bipartite") {
    if (a.inputs.size() != 1) throw InvalidArgument("census bipartite takes one n");
    int n_max = 0;
    try {
      n_max = std::stoi(a.inputs[0]);
    } catch (const std::exception&) {
      throw InvalidArgument("bad n '" + a.inputs[0] + "'");
    }
    const std::vector<RepSet> levels = classify_bipartite(n_max, options);
    std::vector<std::int64_t> counts;
    for (const RepSet& level : levels) counts.push_back(std::int64_t(level.entries.size()));
    const auto totals = euler_transform(counts);
    table << "n\ti\tt";
    if (a.codes) table << "\ti_C\ti_Ciso";
    table << "\n";
    for (const RepSet& level : levels) {
      table << level.n << '\t' << level.entries.size() << '\t' << totals[level.n - 1];
      if (a.codes) {
        const CodeCounts cc = count_codes(level);
        table << '\t' << cc.indecomposable << '\t';
        if (level.n % 2 == 0) {
          table << cc.isodual;
        } else {
          table << '-';
        }
      }
      table << "\n";
      if (!a.out_dir.empty()) {
        write_repset_file(a.out_dir, "bipartite_n" + std::to_string(level.n) + ".txt", level);
      }
    }
  } else if (a.mode == "stream") {
    if (a.inputs.empty()) throw InvalidArgument("census stream needs at least one graph6 file");
    const OrbitKind kind = a.lc ? OrbitKind::kLc : OrbitKind::kElc;
    std::map<int, RepSet> by_n;
    for (const std::string& path : a.inputs) {
      std::istringstream text(read_source(path, io.in, false));
      const std::vector<Graph> graphs = read_graph6_stream(text);
      RepSet reps = classify_stream(graphs, kind, options);
      if (by_n.contains(reps.n)) {
        throw InvalidArgument("two streams for n=" + std::to_string(reps.n));
      }
      by_n.emplace(reps.n, std::move(reps));
    }
    // t needs every n from 1 up.
    std::vector<std::int64_t> counts;
    for (int n = 1; by_n.contains(n); ++n) counts.push_back(std::int64_t(by_n.at(n).entries.size()));
    const auto totals = euler_transform(counts);
    table << "n\ti\tt";
    if (a.lc && a.refine) table << "\ti_ELC";
    table << "\n";
    for (const auto& [n, reps] : by_n) {
      table << n << '\t' << reps.entries.size() << '\t';
      if (n >= 1 && n <= int(totals.size())) {
        table << totals[n - 1];
      } else {
        table << '-';
      }
      if (a.lc && a.refine) {
        std::size_t inner = 0;
        for (const RepEntry& e : reps.entries) inner += e.elc_orbits.value_or(0);
        table << '\t' << inner;
      }
      table << "\n";
      if (!a.out_dir.empty()) {
        write_repset_file(a.out_dir,
                          std::string(a.lc ? "lc" : "elc") + "_n" + std::to_string(n) + ".txt",
                          reps);
      }
    }
  } else {
    throw InvalidArgument("unknown census mode '" + a.mode + "'");
  }
  emit(a.output, table.str(), io.out);
  return 0;
}

// ---------------------------------------------------------------- convert

struct ConvertArgs {
  std::string graph;
  std::string from = "graph6";
  std::string to = "graph6";
  bool color = false;
  std::string output;
};

int run_convert(const ConvertArgs& a, Io io) {
  const Graph g = read_graph(a.graph, a.from, io.in);
  std::optional<Coloring> coloring;
  if (a.color) coloring = bipartition(g);
  emit(a.output, render(g, a.to, coloring), io.out);
  return 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
  std::string family;
  int n = 0;
  int threads = 1;
  std::string output;
};

int run_generate(const GenerateArgs& a, Io io) {
  const std::vector<Graph> graphs = a.family == "bipartite"
                                        ? connected_bipartite_graphs(a.n, a.threads)
                                        : connected_graphs(a.n, a.threads);
  std::ostringstream os;
  for (const Graph& g : graphs) os << to_graph6(g) << "\n";
  emit(a.output, os.str(), io.out);
  return 0;
}

const char* kind_of(const Error& e) {
  if (dynamic_cast<const DisconnectedGraph*>(&e)) return "disconnected";
  if (dynamic_cast<const GuardExceeded*>(&e)) return "guard";
  return "invalid";
}

std::string one_line(std::string s) {
  for (char& ch : s) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Edge local complementation orbits and binary linear codes", "elcgraph"};
  app.require_subcommand(1);
  const std::vector<std::string> graph_formats{"graph6", "edges", "matrix"};
  const std::vector<std::string> render_formats{"graph6", "edges", "dot", "matrix"};

  PivotArgs pivot;
  auto* pivot_cmd = app.add_subcommand("pivot", "ELC on edge {u,v} (1-based labels)");
  pivot_cmd->add_option("graph", pivot.graph, "graph6 string, file, or - for stdin")->required();
  pivot_cmd->add_option("u", pivot.u, "first endpoint")->required();
  pivot_cmd->add_option("v", pivot.v, "second endpoint")->required();
  pivot_cmd->add_option("--def", pivot.def, "implementation")
      ->check(CLI::IsMember({"lc-compose", "classes", "bipartite"}));
  pivot_cmd->add_flag("--no-swap", pivot.no_swap,
                      "undo the final exchange of u and v (standard-form pivot)");
  pivot_cmd->add_option("--format", pivot.format, "input format")->check(CLI::IsMember(graph_formats));
  pivot_cmd->add_option("--to", pivot.to, "output format")->check(CLI::IsMember(render_formats));
  pivot_cmd->add_option("-o,--output", pivot.output, "output file");

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "enumerate an ELC (or LC) orbit");
  orbit_cmd->add_option("graph", orbit.graph, "graph6 string, file, or - for stdin")->required();
  orbit_cmd->add_option("--format", orbit.format, "input format")->check(CLI::IsMember(graph_formats));
  orbit_cmd->add_flag("--labeled", orbit.labeled, "labeled ELC orbit");
  orbit_cmd->add_flag("--lc", orbit.lc, "LC orbit instead of ELC");
  orbit_cmd->add_flag("--stats", orbit.stats, "print orbit statistics");
  orbit_cmd->add_option("--cap", orbit.cap, "orbit size cap (0 = none)");
  orbit_cmd->add_option("-o,--output", orbit.output, "dump file");

  CodeArgs code;
  auto* code_cmd = app.add_subcommand("code", "binary linear code operations");
  code_cmd->add_option("action", code.action, "mindist|infosets|equiv|dual|standard|graph|summary")
      ->required()
      ->check(CLI::IsMember({"mindist", "infosets", "equiv", "dual", "standard", "graph", "summary"}));
  code_cmd->add_option("matrix", code.matrix, "generator matrix file, inline rows, or -")->required();
  code_cmd->add_option("other", code.other, "second matrix for equiv");
  code_cmd->add_option("--method", code.method, "auto|orbit|brute")
      ->check(CLI::IsMember({"auto", "orbit", "brute"}));
  code_cmd->add_option("--to", code.to, "graph output format")->check(CLI::IsMember(render_formats));
  code_cmd->add_option("-o,--output", code.output, "output file");

  CensusArgs census;
  census.threads = default_threads();
  auto* census_cmd = app.add_subcommand("census", "classify orbits");
  census_cmd->add_option("mode", census.mode, "bipartite|stream")
      ->required()
      ->check(CLI::IsMember({"bipartite", "stream"}));
  census_cmd->add_option("inputs", census.inputs, "n (bipartite) or graph6 files (stream)")
      ->required();
  census_cmd->add_flag("--codes", census.codes, "add code counts (bipartite)");
  census_cmd->add_flag("--lc", census.lc, "LC orbits (stream)");
  census_cmd->add_flag("--refine", census.refine, "count ELC orbits inside LC orbits");
  census_cmd->add_flag("--allow-large", census.allow_large, "lift the default n guard");
  census_cmd->add_option("--threads", census.threads, "worker threads (default $ELC_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  census_cmd->add_option("--out-dir", census.out_dir, "directory for RepSet files");
  census_cmd->add_option("-o,--output", census.output, "table file");

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "convert between graph formats");
  convert_cmd->add_option("graph", convert.graph, "graph6 string, file, or -")->required();
  convert_cmd->add_option("--from", convert.from, "input format")->check(CLI::IsMember(graph_formats));
  convert_cmd->add_option("--to", convert.to, "output format")->check(CLI::IsMember(render_formats));
  convert_cmd->add_flag("--color", convert.color, "color bipartite sides in DOT output");
  convert_cmd->add_option("-o,--output", convert.output, "output file");

  GenerateArgs generate;
  generate.threads = default_threads();
  auto* generate_cmd =
      app.add_subcommand("generate", "list connected graphs on n vertices as graph6");
  generate_cmd->add_option("family", generate.family, "connected|bipartite")
      ->required()
      ->check(CLI::IsMember({"connected", "bipartite"}));
  generate_cmd->add_option("n", generate.n, "vertex count")->required();
  generate_cmd->add_option("--threads", generate.threads, "worker threads")
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("-o,--output", generate.output, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << one_line(e.what()) << "\n";
    return 2;
  }

  Io io{in, out};
  try {
    if (*pivot_cmd) return run_pivot(pivot, io);
    if (*orbit_cmd) return run_orbit(orbit, io);
    if (*code_cmd) return run_code(code, io);
    if (*census_cmd) return run_census(census, io);
    if (*convert_cmd) return run_convert(convert, io);
    if (*generate_cmd) return run_generate(generate, io);
  } catch (const Error& e) {
    err << "error: " << kind_of(e) << ": " << one_line(e.what()) << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 2;
}

}  // namespace elc::cli
