#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "elc/canon.hpp"
#include "elc/code.hpp"
#include "elc/graph_io.hpp"
#include "fixtures.hpp"

using namespace elc;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string hamming_g6() { return to_graph6(fixtures::hamming_graph()); }

std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("elcgraph_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

bool single_error_line(const std::string& err) {
  return err.rfind("error: ", 0) == 0 && err.find('\n') == err.size() - 1;
}

}  // namespace

TEST(Cli, PivotNoSwapGivesExampleMatrix) {
  const Outcome r = run({"pivot", hamming_g6(), "2", "7", "--no-swap"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Graph g = from_graph6(r.out.substr(0, r.out.find('\n')));
  EXPECT_EQ(graph_to_code(g, Side::kLeft, fixtures::hamming_coloring()), fixtures::hamming_swapped());
}

TEST(Cli, PivotDefinitionsAgree) {
  const Outcome a = run({"pivot", hamming_g6(), "2", "7", "--def", "lc-compose"});
  const Outcome b = run({"pivot", hamming_g6(), "2", "7", "--def", "classes"});
  const Outcome c = run({"pivot", hamming_g6(), "2", "7", "--def", "bipartite"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(b.out, c.out);
}

TEST(Cli, PivotSmallGraphs) {
  EXPECT_EQ(run({"pivot", "A_", "1", "2"}).out, "A_\n");
  const Outcome r = run({"pivot", "Ch", "2", "3", "--to", "edges"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_edge_list(r.out), fixtures::graph1(4, {{1, 3}, {2, 3}, {2, 4}, {1, 4}}));
}

TEST(Cli, PivotErrors) {
  const Outcome missing = run({"pivot", "Ch", "1", "3"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_TRUE(single_error_line(missing.err)) << missing.err;
  const Outcome bad = run({"pivot", "C", "1", "2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(single_error_line(bad.err));
  const Outcome notbip = run({"pivot", "Bw", "1", "2", "--def", "bipartite"});
  EXPECT_EQ(notbip.code, 1);
  const Outcome usage = run({"pivot", "Ch"});
  EXPECT_EQ(usage.code, 2);
  EXPECT_TRUE(single_error_line(usage.err)) << usage.err;
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(Cli, ReadsStdinAndEdgeLists) {
  const Outcome r = run({"convert", "-", "--from", "edges"}, "1 2\n2 3\n3 4\n");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "Ch\n");
  const Outcome dot = run({"convert", "Ch", "--to", "dot", "--color"});
  EXPECT_NE(dot.out.find("fillcolor"), std::string::npos);
  const Outcome m = run({"convert", "Ch", "--to", "matrix"});
  EXPECT_EQ(m.out, "0100\n1010\n0101\n0010\n");
}

TEST(Cli, OrbitDumpAndStats) {
  const Outcome p4 = run({"orbit", "Ch"});
  ASSERT_EQ(p4.code, 0) << p4.err;
  std::istringstream dump(p4.out);
  EXPECT_EQ(read_graph6_stream(dump).size(), 2u);
  const Outcome labeled = run({"orbit", hamming_g6(), "--labeled", "--stats"});
  EXPECT_NE(labeled.out.find("size_labeled=28"), std::string::npos);
  const Outcome stats = run({"orbit", hamming_g6(), "--stats"});
  EXPECT_NE(stats.out.find("min_degree_left=2"), std::string::npos);
  const Outcome lc = run({"orbit", "Bw", "--lc", "--stats"});
  EXPECT_NE(lc.out.find("size_unlabeled=2"), std::string::npos);
}

TEST(Cli, OrbitDisconnectedListsComponents) {
  const Outcome r = run({"orbit", "C`"});  // two disjoint edges
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(single_error_line(r.err));
  EXPECT_EQ(r.err.rfind("error: disconnected:", 0), 0u) << r.err;
}

TEST(Cli, OrbitCap) {
  const Outcome r = run({"orbit", hamming_g6(), "--labeled", "--cap", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: guard:", 0), 0u) << r.err;
}

TEST(Cli, CodeActions) {
  const std::string h = "1000011,0100101,0010110,0001111";
  EXPECT_EQ(run({"code", "mindist", h}).out, "3\n");
  EXPECT_EQ(run({"code", "mindist", h, "--method", "brute"}).out, "3\n");
  EXPECT_EQ(run({"code", "infosets", h}).out, "28\n");
  EXPECT_EQ(run({"code", "equiv", h, "1000111,0100101,0010110,0001011"}).out, "equivalent\n");
  EXPECT_EQ(run({"code", "equiv", h, "1000000,0100101,0010110,0001111"}).out.substr(0, 3), "not");
  const Outcome s = run({"code", "summary", "11"});
  EXPECT_EQ(s.out.rfind("[2,1,2] self-dual", 0), 0u) << s.out;
  EXPECT_EQ(run({"code", "graph", h}).out, hamming_g6() + "\n");
  const Outcome d = run({"code", "dual", h});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("[7,3]"), std::string::npos);
  const Outcome bad = run({"code", "mindist", "110,110"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(single_error_line(bad.err));
}

TEST(Cli, CodeFromFile) {
  const auto dir = temp_dir("code");
  const auto path = dir / "h.txt";
  std::ofstream(path) << "# Hamming\n1000|011\n0100|101\n0010|110\n0001|111\n";
  EXPECT_EQ(run({"code", "mindist", path.string()}).out, "3\n");
}

TEST(Cli, CensusBipartiteTable) {
  const auto dir = temp_dir("census");
  const Outcome r = run({"census", "bipartite", "8", "--codes", "--threads", "2", "--out-dir", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("8\t43\t104\t76\t10\n"), std::string::npos) << r.out;
  EXPECT_TRUE(std::filesystem::exists(dir / "bipartite_n8.txt"));
  const Outcome one = run({"census", "bipartite", "1"});
  EXPECT_NE(one.out.find("1\t1\t1\n"), std::string::npos) << one.out;
  EXPECT_EQ(run({"census", "bipartite", "13"}).code, 1);
}

TEST(Cli, CensusStreamAndGenerate) {
  const auto dir = temp_dir("stream");
  const auto path = (dir / "connected6.g6").string();
  ASSERT_EQ(run({"generate", "connected", "6", "-o", path}).code, 0);
  const Outcome r = run({"census", "stream", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("6\t35\t"), std::string::npos) << r.out;
  const Outcome lc = run({"census", "stream", path, "--lc", "--refine"});
  EXPECT_NE(lc.out.find("6\t11\t-\t35"), std::string::npos) << lc.out;
  EXPECT_EQ(run({"census", "stream", (dir / "missing.g6").string()}).code, 1);
}

TEST(Cli, ThreadsFromEnvironment) {
  ::setenv("ELC_THREADS", "3", 1);
  const Outcome r = run({"census", "bipartite", "6"});
  ::unsetenv("ELC_THREADS");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("6\t8\t22\n"), std::string::npos);
}

TEST(Cli, Help) {
  const Outcome r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pivot"), std::string::npos);
}
