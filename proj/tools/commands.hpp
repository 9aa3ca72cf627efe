#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccenum/ccenum.hpp"

namespace ccenum::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kCapacity = 4 };

enum class Engine { Sequential, Parallel };

struct RunReport {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  std::uint64_t triangles = 0;
  std::uint64_t chordless = 0;
  double labeling_ms = 0;
  double seed_ms = 0;
  double expand_ms = 0;
  double total_ms = 0;
  Engine engine = Engine::Sequential;
};

struct EnumerateOptions {
  Engine engine = Engine::Parallel;
  std::size_t workers = KernelConfig::default_workers();
  bool count_only = false;
  bool canonical = false;
  bool sorted = false;
  std::optional<std::string> evolution_path;
  std::optional<std::size_t> rounds;
  bool early_exit = true;
  std::optional<std::size_t> fixed_capacity;
  /// Frontier slice size for the parallel engine; 0 expands whole rounds.
  std::size_t max_frontier_rows = 0;
};

/// Runs one engine on `g` (labels computed here), streams cycles to
/// `cycles_out` unless count-only, and writes the evolution CSV if asked.
RunReport enumerate_graph(CompactGraph g, const std::string& name, const EnumerateOptions& options,
                          std::ostream* cycles_out);

/// "triangles=<C3> chordless_cycles=<clc> total=<sum>"
std::string summary_line(const RunReport& report);
/// key=value diagnostics line with sizes and phase timings.
std::string report_line(const RunReport& report);

struct BenchOptions {
  std::size_t repetitions = 10;
  std::size_t workers = KernelConfig::default_workers();
  bool count_only = false;
  std::size_t random_graphs = 0;
  std::uint64_t seed = 1;
};

/// CSV: graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup,agree
void bench(const std::vector<std::string>& inputs, const BenchOptions& options, std::ostream& out,
           std::ostream& err);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ccenum::cli
