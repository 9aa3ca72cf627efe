#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace ccenum::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void write_cycle(std::ostream& out, std::span<const VertexId> cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out << ' ';
    out << cycle[i];
  }
  out << '\n';
}

void emit_cycles(const CompactGraph& g, const CycleSet& cycles, const EnumerateOptions& options,
                 std::ostream& out) {
  if (!options.sorted && !options.canonical) {
    for (std::size_t i = 0; i < cycles.size(); ++i) write_cycle(out, cycles[i]);
    return;
  }
  std::vector<std::vector<VertexId>> rows;
  rows.reserve(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto c = cycles[i];
    rows.push_back(options.canonical ? canonicalize(g, c, g.labels())
                                     : std::vector<VertexId>(c.begin(), c.end()));
  }
  if (options.sorted) std::sort(rows.begin(), rows.end());
  for (const auto& r : rows) write_cycle(out, r);
}

CompactGraph read_graph(const std::string& path, bool niche) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InvalidParameter("cannot open '" + path + "'");
    in = &file;
  }
  return niche ? niche_overlap(read_arc_list(*in)) : load_edge_list(*in);
}

// A bench input is a file when one exists at that path, else a family spec.
CompactGraph resolve_input(const std::string& input) {
  if (std::filesystem::exists(input)) return read_graph(input, false);
  return generate(parse_family(input));
}

const char* engine_name(Engine e) { return e == Engine::Sequential ? "seq" : "par"; }

}  // namespace

RunReport enumerate_graph(CompactGraph g, const std::string& name, const EnumerateOptions& options,
                          std::ostream* cycles_out) {
  RunReport report;
  report.graph = name;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.max_degree = g.max_degree();
  report.engine = options.engine;

  const auto t_total = Clock::now();
  auto t0 = Clock::now();
  label_graph(g);
  report.labeling_ms = ms_since(t0);

  CycleSet cycles;
  if (options.engine == Engine::Sequential) {
    PhaseTimes times;
    cycles = enumerate_sequential(g, {options.count_only, &times});
    report.seed_ms = times.seed_ms;
    report.expand_ms = times.expand_ms;
  } else {
    KernelConfig config;
    config.workers = options.workers;
    config.rounds = options.rounds;
    config.early_exit_check = options.early_exit;
    config.count_only = options.count_only;
    config.evolution_log = options.evolution_path.has_value();
    if (options.fixed_capacity) {
      config.capacity.initial_rows = *options.fixed_capacity;
      config.capacity.growable = false;
    }
    config.capacity.max_frontier_rows = options.max_frontier_rows;
    ParallelResult result = host_enumerate(g, config);
    report.seed_ms = result.times.seed_ms;
    report.expand_ms = result.times.expand_ms;
    if (options.evolution_path) {
      std::ofstream csv(*options.evolution_path);
      if (!csv) throw InvalidParameter("cannot write '" + *options.evolution_path + "'");
      result.log.write_csv(csv);
    }
    cycles = std::move(result.cycles);
  }
  report.total_ms = ms_since(t_total);
  report.triangles = cycles.triangle_count();
  report.chordless = cycles.chordless_count();
  if (cycles_out != nullptr && !options.count_only) emit_cycles(g, cycles, options, *cycles_out);
  return report;
}

std::string summary_line(const RunReport& r) {
  std::ostringstream s;
  s << "triangles=" << r.triangles << " chordless_cycles=" << r.chordless
    << " total=" << r.triangles + r.chordless;
  return s.str();
}

std::string report_line(const RunReport& r) {
  std::ostringstream s;
  s << "graph=" << r.graph << " engine=" << engine_name(r.engine) << " n=" << r.n << " m=" << r.m
    << " max_degree=" << r.max_degree << " labeling_ms=" << r.labeling_ms
    << " stage1_ms=" << r.seed_ms << " rounds_ms=" << r.expand_ms << " total_ms=" << r.total_ms;
  return s.str();
}

void bench(const std::vector<std::string>& inputs, const BenchOptions& options, std::ostream& out,
           std::ostream& err) {
  std::vector<std::pair<std::string, CompactGraph>> graphs;
  for (const auto& input : inputs) {
    try {
      graphs.emplace_back(input, resolve_input(input));
    } catch (const Error& e) {
      err << "skipping " << input << ": " << e.what() << '\n';
    }
  }
  const double probabilities[] = {0.2, 0.35, 0.5};
  for (std::size_t i = 0; i < options.random_graphs; ++i) {
    const std::uint64_t seed = options.seed + i;
    const std::size_t n = 4 + seed % 17;
    const double p = probabilities[i % 3];
    std::ostringstream name;
    name << "gnp:" << n << ':' << p << ':' << seed;
    graphs.emplace_back(name.str(), build_compact(random_gnp(n, p, seed)));
  }

  out << "graph,n,m,max_degree,triangles,chordless_cycles,seq_ms,par_ms,speedup,agree\n";
  const std::size_t reps = std::max<std::size_t>(1, options.repetitions);
  for (const auto& [name, g] : graphs) {
    try {
      EnumerateOptions eo;
      eo.count_only = options.count_only;
      eo.workers = options.workers;
      double seq_ms = 0;
      double par_ms = 0;
      RunReport seq;
      RunReport par;
      for (std::size_t r = 0; r < reps; ++r) {
        eo.engine = Engine::Sequential;
        seq = enumerate_graph(g, name, eo, nullptr);
        eo.engine = Engine::Parallel;
        par = enumerate_graph(g, name, eo, nullptr);
        seq_ms += seq.total_ms;
        par_ms += par.total_ms;
      }
      seq_ms /= static_cast<double>(reps);
      par_ms /= static_cast<double>(reps);
      const bool agree = seq.triangles == par.triangles && seq.chordless == par.chordless;
      out << name << ',' << seq.n << ',' << seq.m << ',' << seq.max_degree << ',' << seq.triangles
          << ',' << seq.chordless << ',' << seq_ms << ',' << par_ms << ','
          << (par_ms > 0 ? seq_ms / par_ms : 0.0) << ',' << (agree ? "yes" : "no") << '\n';
      if (!agree) err << name << ": engines disagree\n";
    } catch (const std::exception& e) {
      err << "skipping " << name << ": " << e.what() << '\n';
    }
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate the chordless cycles of an undirected graph"};
  app.require_subcommand(1);

  std::string family;
  std::string output_path;
  auto* gen = app.add_subcommand("generate", "Write a synthetic graph as an edge list");
  gen->add_option("family", family, "cycle:K | wheel:K | bipartite:AxB | grid:RxC")->required();
  gen->add_option("-o,--output", output_path, "Output file (default: standard output)");

  std::string input;
  std::string engine = "par";
  EnumerateOptions eo;
  bool niche = false;
  bool no_early_exit = false;
  std::size_t rounds = 0;
  std::size_t capacity = 0;
  std::string evolution;
  auto* en = app.add_subcommand("enumerate", "Enumerate chordless cycles of an edge-list file");
  en->add_option("input", input, "Edge-list file, or - for standard input")->required();
  en->add_option("--engine", engine, "seq or par")->check(CLI::IsMember({"seq", "par"}));
  en->add_option("--workers", eo.workers, "Parallel workers")->check(CLI::PositiveNumber);
  en->add_flag("--count-only", eo.count_only, "Count cycles without storing them");
  en->add_flag("--canonical", eo.canonical, "Re-canonicalize every cycle before printing");
  en->add_flag("--sorted", eo.sorted, "Sort the cycle stream lexicographically");
  auto* evo_opt = en->add_option("--evolution", evolution, "Write per-round |T|,|C| CSV");
  en->add_flag("--niche-overlap", niche, "Read 'predator prey' arcs and use the niche-overlap graph");
  auto* rounds_opt = en->add_option("--rounds", rounds, "Stage-2 rounds (default n-3)");
  en->add_flag("--no-early-exit", no_early_exit, "Always run every round");
  auto* cap_opt = en->add_option("--capacity", capacity, "Fixed path-store rows (no growth)")
                      ->check(CLI::PositiveNumber);
  en->add_option("--max-frontier", eo.max_frontier_rows,
                 "Expand at most N frontier rows at a time (bounds memory; 0 = whole rounds)");

  std::string label_input;
  bool label_niche = false;
  auto* lab = app.add_subcommand("labels", "Print the degree labeling as 'vertex label' lines");
  lab->add_option("input", label_input, "Edge-list file, or - for standard input")->required();
  lab->add_flag("--niche-overlap", label_niche, "Read 'predator prey' arcs");

  std::vector<std::string> bench_inputs;
  BenchOptions bo;
  auto* be = app.add_subcommand("bench", "Time both engines; CSV on standard output");
  be->add_option("inputs", bench_inputs, "Edge-list files or family specs");
  be->add_option("--reps", bo.repetitions, "Repetitions per graph")->check(CLI::PositiveNumber);
  be->add_option("--workers", bo.workers, "Parallel workers")->check(CLI::PositiveNumber);
  be->add_flag("--count-only", bo.count_only, "Count cycles without storing them");
  be->add_option("--random", bo.random_graphs, "Also bench this many seeded random graphs");
  be->add_option("--seed", bo.seed, "Seed of the first random graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*gen) {
      const EdgeList list = generate_edges(parse_family(family));
      if (output_path.empty()) {
        write_edge_list(out, list);
      } else {
        std::ofstream file(output_path);
        if (!file) throw InvalidParameter("cannot write '" + output_path + "'");
        write_edge_list(file, list);
      }
      return kOk;
    }
    if (*en) {
      eo.engine = engine == "seq" ? Engine::Sequential : Engine::Parallel;
      if (*evo_opt) {
        if (eo.engine != Engine::Parallel) throw InvalidParameter("--evolution needs --engine par");
        eo.evolution_path = evolution;
      }
      if (*rounds_opt) eo.rounds = rounds;
      if (*cap_opt) eo.fixed_capacity = capacity;
      eo.early_exit = !no_early_exit;
      const RunReport report = enumerate_graph(read_graph(input, niche), input, eo, &out);
      out << summary_line(report) << '\n';
      err << report_line(report) << '\n';
      return kOk;
    }
    if (*lab) {
      const Labeling l = degree_labeling(read_graph(label_input, label_niche));
      for (std::size_t v = 0; v < l.labels.size(); ++v) out << v << ' ' << l.labels[v] << '\n';
      return kOk;
    }
    if (*be) {
      bench(bench_inputs, bo, out, err);
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InvalidVertex& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapacityExceeded& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ccenum::cli
