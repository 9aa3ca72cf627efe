#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ccenum/ccenum.hpp"
#include "commands.hpp"
#include "support/test_support.hpp"

using namespace ccenum;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ccenum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("ccenum_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::vector<VertexId>> cycle_lines(const std::string& out) {
  std::vector<std::vector<VertexId>> cycles;
  for (const auto& line : lines(out)) {
    if (line.rfind("triangles=", 0) == 0) continue;
    std::istringstream in(line);
    std::vector<VertexId> c;
    for (VertexId v; in >> v;) c.push_back(v);
    cycles.push_back(c);
  }
  return cycles;
}

}  // namespace

TEST_CASE("generate") {
  TempDir dir;
  auto r = run({"generate", "cycle:3", "-o", dir.file("c3.txt")});
  CHECK(r.code == cli::kOk);
  CHECK(read(dir.file("c3.txt")) == "0 1\n1 2\n2 0\n");

  r = run({"generate", "grid:4x10"});
  CHECK(r.code == cli::kOk);
  CHECK(lines(r.out).size() == 66);

  CHECK(run({"generate", "grid:0x5"}).code == cli::kUsage);
  CHECK(run({"generate", "hypercube:3"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
}

TEST_CASE("enumerate: grid 6x6 on both engines") {
  TempDir dir;
  run({"generate", "grid:6x6", "-o", dir.file("g.txt")});
  for (const char* engine : {"par", "seq"}) {
    CAPTURE(engine);
    const auto r = run({"enumerate", dir.file("g.txt"), "--engine", engine, "--count-only"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "triangles=0 chordless_cycles=3436 total=3436\n");
    CHECK(r.err.find("engine=" + std::string(engine)) != std::string::npos);
  }
}

TEST_CASE("enumerate: triangle") {
  TempDir dir;
  const auto path = dir.write("t.txt", "0 1\n1 2\n2 0\n");
  const auto r = run({"enumerate", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1 0 2\ntriangles=1 chordless_cycles=0 total=1\n");
}

TEST_CASE("enumerate: error exits") {
  TempDir dir;
  auto r = run({"enumerate", dir.write("bad.txt", "0 1\n1 x\n")});
  CHECK(r.code == cli::kParse);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(run({"enumerate", dir.write("loop.txt", "0 0\n")}).code == cli::kParse);
  CHECK(run({"enumerate", dir.file("missing.txt")}).code == cli::kUsage);

  run({"generate", "grid:4x4", "-o", dir.file("g.txt")});
  CHECK(run({"enumerate", dir.file("g.txt"), "--capacity", "2"}).code == cli::kCapacity);
  CHECK(run({"enumerate", dir.file("g.txt"), "--capacity", "100000"}).code == cli::kOk);
  CHECK(run({"enumerate", dir.file("g.txt"), "--engine", "gpu"}).code == cli::kUsage);
  CHECK(run({"enumerate", dir.file("g.txt"), "--engine", "seq", "--evolution",
             dir.file("e.csv")})
            .code == cli::kUsage);
}

TEST_CASE("enumerate: engines agree and the stream re-verifies") {
  TempDir dir;
  for (const auto& ng : testing::random_corpus(10, 606)) {
    CAPTURE(ng.name);
    std::ostringstream text;
    write_edge_list(text, EdgeList{ng.graph.vertex_count(), ng.graph.edges()});
    const auto path = dir.write("r.txt", text.str());
    const auto seq = run({"enumerate", path, "--engine", "seq", "--sorted", "--canonical"});
    const auto par =
        run({"enumerate", path, "--engine", "par", "--workers", "3", "--sorted", "--canonical"});
    REQUIRE(seq.code == cli::kOk);
    REQUIRE(par.code == cli::kOk);
    CHECK(seq.out == par.out);

    const auto adj = testing::dense(ng.graph);
    const auto cycles = cycle_lines(par.out);
    for (const auto& c : cycles) CHECK(testing::is_chordless_cycle(adj, c));
    const auto oracle = brute_force_chordless(ng.graph);
    CHECK(cycles.size() == oracle.total());
  }
}

TEST_CASE("enumerate: sorted stream is lexicographic") {
  TempDir dir;
  run({"generate", "bipartite:3x3", "-o", dir.file("k.txt")});
  const auto r = run({"enumerate", dir.file("k.txt"), "--sorted"});
  const auto cycles = cycle_lines(r.out);
  CHECK(cycles.size() == 9);
  CHECK(std::is_sorted(cycles.begin(), cycles.end()));
}

TEST_CASE("enumerate: evolution csv") {
  TempDir dir;
  run({"generate", "grid:4x5", "-o", dir.file("g.txt")});
  const auto r = run({"enumerate", dir.file("g.txt"), "--count-only", "--evolution",
                      dir.file("e.csv")});
  REQUIRE(r.code == cli::kOk);
  const auto rows = lines(read(dir.file("e.csv")));
  REQUIRE(rows.size() >= 3);
  CHECK(rows[0] == "round,frontier_size,cycles_total");
  CHECK(rows[1].rfind("1,", 0) == 0);
  CHECK(rows.back().find(",0,") != std::string::npos);

  const auto sliced = run({"enumerate", dir.file("g.txt"), "--count-only", "--max-frontier", "2",
                           "--evolution", dir.file("s.csv")});
  CHECK(sliced.out == r.out);
  CHECK(read(dir.file("s.csv")) == read(dir.file("e.csv")));

  const auto fixed = run({"enumerate", dir.file("g.txt"), "--count-only", "--no-early-exit",
                          "--rounds", "17"});
  CHECK(fixed.out == r.out);
}

TEST_CASE("enumerate: niche overlap input") {
  TempDir dir;
  // Predators 0..3 share prey pairwise around a square: 0-1 via 4, 1-2 via 5,
  // 2-3 via 6, 3-0 via 7.
  const auto path =
      dir.write("web.txt", "0 4\n1 4\n1 5\n2 5\n2 6\n3 6\n3 7\n0 7\n");
  const auto r = run({"enumerate", path, "--niche-overlap", "--count-only"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "triangles=0 chordless_cycles=1 total=1\n");
  CHECK(run({"enumerate", path, "--count-only"}).out ==
        "triangles=0 chordless_cycles=1 total=1\n");
}

TEST_CASE("labels") {
  TempDir dir;
  const auto path = dir.write("star.txt", "0 1\n0 2\n0 3\n0 4\n");
  const auto r = run({"labels", path});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "0 3\n1 0\n2 1\n3 2\n4 4\n");
}

TEST_CASE("bench") {
  TempDir dir;
  const std::string header =
      "graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup,agree";
  auto r = run({"bench", "--reps", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == header + "\n");

  const auto tri = dir.write("t.txt", "0 1\n1 2\n2 0\n");
  r = run({"bench", tri, "--reps", "1"});
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rfind(tri + ",3,3,2,1,0,", 0) == 0);
  CHECK(rows[1].substr(rows[1].size() - 4) == ",yes");

  r = run({"bench", "grid:5x6", "bipartite:8x8", "no-such-input", "--reps", "1", "--count-only"});
  rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind("grid:5x6,30,49,4,0,749,", 0) == 0);
  CHECK(rows[2].rfind("bipartite:8x8,16,64,8,0,784,", 0) == 0);
  CHECK(r.err.find("no-such-input") != std::string::npos);

  r = run({"bench", "--reps", "1", "--random", "3", "--seed", "5"});
  CHECK(lines(r.out).size() == 4);
}
