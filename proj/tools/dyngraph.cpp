// dyngraph: benchmark and verification driver for the dynamic graph
// structure. `bench` loads or synthesizes a graph, runs batched updates, and
// reports per-phase timings plus memory consumption; `verify` runs the
// randomized oracle-equivalence suite.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dyngraph/dyngraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDataError = 2;
constexpr int kExitEngineError = 3;

struct BenchArgs {
  std::string input;
  std::string format = "mtx";
  std::string batch_size = "bulk";
  std::string ops = "insert";
  std::string block_size = "auto";
  std::string order = "prefix";
  std::string csv;
  std::string name;
  std::uint64_t arena_bytes = 8ull << 30;
  std::uint64_t seed = 1;
  std::uint64_t query_sample = 1000;
  std::uint64_t synth_vertices = 0;
  std::uint64_t synth_edges = 0;
  std::uint32_t threads = 1;
  bool symmetrize = false;
  bool no_reclaim = false;
  double initial_fraction = 0.5;
  double trigger_fraction = 0.8;
  double growth_fraction = 0.25;
};

std::uint64_t parse_count(const std::string& text, const std::string& what,
                          const std::string& word_for_zero) {
  if (text == word_for_zero) return 0;
  try {
    const std::uint64_t value = std::stoull(text);
    if (value == 0) throw std::invalid_argument(what);
    return value;
  } catch (const std::exception&) {
    throw CLI::ValidationError(what, "expected '" + word_for_zero + "' or a positive integer, got '" +
                                         text + "'");
  }
}

dyngraph::io::WorkloadSpec build_spec(const BenchArgs& args) {
  using Source = dyngraph::io::WorkloadSpec::Source;
  dyngraph::io::WorkloadSpec spec;

  if (args.format == "mtx") {
    spec.source = Source::MatrixMarket;
  } else if (args.format == "el") {
    spec.source = Source::EdgeList;
  } else if (args.format == "synth-uniform") {
    spec.source = Source::SynthUniform;
  } else if (args.format == "synth-powerlaw") {
    spec.source = Source::SynthPowerLaw;
  } else {
    throw CLI::ValidationError("--format", "expected mtx, el, synth-uniform or synth-powerlaw");
  }

  if (spec.source == Source::MatrixMarket || spec.source == Source::EdgeList) {
    if (args.input.empty()) throw CLI::ValidationError("--input", "an input file is required");
  } else if (args.synth_vertices == 0 || args.synth_edges == 0) {
    throw CLI::ValidationError("--synth-vertices/--synth-edges",
                               "synthetic sources need vertex and edge counts");
  }

  spec.input_path = args.input;
  spec.synth_vertices = args.synth_vertices;
  spec.synth_edges = args.synth_edges;
  spec.symmetrize = args.symmetrize;
  spec.batch_size = parse_count(args.batch_size, "--batch-size", "bulk");
  spec.block_size = static_cast<std::uint32_t>(parse_count(args.block_size, "--block-size", "auto"));
  spec.seed = args.seed;
  spec.query_sample = args.query_sample;

  if (args.ops == "insert") {
    spec.ops = dyngraph::io::OpsMode::Insert;
  } else if (args.ops == "delete") {
    spec.ops = dyngraph::io::OpsMode::Delete;
  } else if (args.ops == "mixed") {
    spec.ops = dyngraph::io::OpsMode::InsertThenDelete;
  } else if (args.ops == "query") {
    spec.ops = dyngraph::io::OpsMode::QuerySample;
  } else {
    throw CLI::ValidationError("--ops", "expected insert, delete, mixed or query");
  }

  if (args.order == "prefix") {
    spec.order = dyngraph::io::EdgeOrder::Prefix;
  } else if (args.order == "shuffled") {
    spec.order = dyngraph::io::EdgeOrder::Shuffled;
  } else {
    throw CLI::ValidationError("--order", "expected prefix or shuffled");
  }

  spec.graph_name = args.name;
  if (spec.graph_name.empty()) {
    if (!args.input.empty()) {
      const auto slash = args.input.find_last_of('/');
      spec.graph_name = slash == std::string::npos ? args.input : args.input.substr(slash + 1);
    } else {
      spec.graph_name = args.format;
    }
  }

  spec.config.arena_bytes = args.arena_bytes;
  spec.config.pool.initial_fraction = args.initial_fraction;
  spec.config.pool.trigger_fraction = args.trigger_fraction;
  spec.config.pool.growth_fraction = args.growth_fraction;
  spec.config.reclaim_on_delete = !args.no_reclaim;
  spec.config.workers = args.threads;
  return spec;
}

void print_report(const dyngraph::io::RunReport& report) {
  std::cout << "graph " << report.graph_name << ": " << report.vertex_count << " vertices, "
            << report.edges_inserted << " edges inserted";
  if (report.edges_deleted > 0) std::cout << ", " << report.edges_deleted << " delete entries";
  std::cout << "\nblock size " << report.effective_block_size << ", batch size ";
  if (report.batch_size == 0) {
    std::cout << "bulk";
  } else {
    std::cout << report.batch_size;
  }
  std::cout << "\n\nphase timings:\n";
  std::printf("  %-8s %12.3f ms\n", "init", report.total_ms("init"));
  std::printf("  %-8s %12.3f ms\n", "insert", report.total_ms("insert"));
  if (report.edges_deleted > 0) {
    std::printf("  %-8s %12.3f ms\n", "delete", report.total_ms("delete"));
  }
  if (report.queries_run > 0) {
    std::printf("  %-8s %12.3f ms  (%llu queries, %llu hits)\n", "query",
                report.total_ms("query"), static_cast<unsigned long long>(report.queries_run),
                static_cast<unsigned long long>(report.queries_hit));
  }

  const auto& st = report.final_stats;
  const auto& mem = report.rows.back().memory;
  std::cout << "\nmemory (bytes):\n";
  std::printf("  %-12s %14llu\n", "dictionary", static_cast<unsigned long long>(mem.dictionary_bytes));
  std::printf("  %-12s %14llu\n", "sentinels", static_cast<unsigned long long>(mem.sentinel_bytes));
  std::printf("  %-12s %14llu\n", "edge blocks", static_cast<unsigned long long>(mem.pool_bytes));
  std::printf("  %-12s %14llu\n", "edge queue", static_cast<unsigned long long>(mem.queue_bytes));
  std::printf("  %-12s %14llu\n", "total", static_cast<unsigned long long>(mem.total()));

  std::cout << "\nstructure:\n";
  std::printf("  alive vertices     %llu of %llu (capacity %llu)\n",
              static_cast<unsigned long long>(st.alive_vertices),
              static_cast<unsigned long long>(st.logical_size),
              static_cast<unsigned long long>(st.capacity));
  std::printf("  active edges       %llu\n", static_cast<unsigned long long>(st.active_edges));
  std::printf("  adjacency blocks   %llu (pool created %llu, queued %llu)\n",
              static_cast<unsigned long long>(st.adjacency_blocks),
              static_cast<unsigned long long>(st.pool_blocks_created),
              static_cast<unsigned long long>(st.pool_queue_size));
  std::printf("  hole ratio         %.4f\n", st.hole_ratio);
  std::printf("  arena reservations %u (pool growths %u)\n", st.arena_reservations,
              st.pool_growths);
  if (!st.cbt_height_histogram.empty()) {
    std::cout << "  tree heights      ";
    for (const auto& [height, count] : st.cbt_height_histogram) {
      std::cout << " h" << height << ":" << count;
    }
    std::cout << "\n";
  }
}

int run_bench(const BenchArgs& args) {
  const auto spec = build_spec(args);
  const auto report = dyngraph::io::run_workload(spec);
  print_report(report);
  if (!args.csv.empty()) {
    std::ofstream out(args.csv);
    if (!out) {
      std::cerr << "error: cannot write CSV to '" << args.csv << "'\n";
      return kExitDataError;
    }
    dyngraph::io::write_csv(report, out);
    std::cout << "\ncsv written to " << args.csv << "\n";
  }
  return kExitOk;
}

int run_verify(std::uint64_t workloads, std::uint64_t seed, std::uint64_t max_vertices,
               std::uint64_t max_edges, bool quiet) {
  dyngraph::VerifyOptions options;
  options.workloads = workloads;
  options.seed = seed;
  options.max_vertices = max_vertices;
  options.max_edges = max_edges;
  if (!quiet) options.progress = &std::cout;

  const auto result = dyngraph::run_verify(options);
  std::cout << "verify: " << result.workloads_run << " workloads, " << result.batches_run
            << " batches, " << result.edges_inserted << " edges inserted, "
            << result.edges_deleted << " delete entries, " << result.vertex_ops
            << " vertex updates (seed " << seed << ")\n";
  if (!result.ok()) {
    for (const auto& line : result.mismatches) std::cerr << "MISMATCH: " << line << "\n";
    std::cout << "verify: FAILED with " << result.mismatches.size() << " mismatches\n";
    return kExitEngineError;
  }
  std::cout << "verify: OK\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic graph structure benchmark harness"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a batched update workload");
  bench_cmd->add_option("--input", bench.input, "input graph file");
  bench_cmd->add_option("--format", bench.format, "mtx | el | synth-uniform | synth-powerlaw");
  bench_cmd->add_option("--batch-size", bench.batch_size, "edges per batch, or 'bulk'");
  bench_cmd->add_option("--ops", bench.ops, "insert | delete | mixed | query");
  bench_cmd->add_option("--block-size", bench.block_size, "entries per edge block, or 'auto'");
  bench_cmd->add_option("--arena-bytes", bench.arena_bytes, "simulated memory budget");
  bench_cmd->add_option("--seed", bench.seed, "rng seed for sampling and synthesis");
  bench_cmd->add_option("--csv", bench.csv, "write the per-phase report to this file");
  bench_cmd->add_option("--name", bench.name, "graph name used in reports");
  bench_cmd->add_option("--order", bench.order, "batch edge order: prefix | shuffled");
  bench_cmd->add_option("--threads", bench.threads, "worker threads for batch phases");
  bench_cmd->add_option("--query-sample", bench.query_sample, "queries after the update phases");
  bench_cmd->add_option("--synth-vertices", bench.synth_vertices, "vertex count for synth formats");
  bench_cmd->add_option("--synth-edges", bench.synth_edges, "edge count for synth formats");
  bench_cmd->add_option("--initial-fraction", bench.initial_fraction,
                        "arena fraction reserved for blocks at launch");
  bench_cmd->add_option("--trigger-fraction", bench.trigger_fraction,
                        "queue consumption that triggers a growth");
  bench_cmd->add_option("--growth-fraction", bench.growth_fraction, "relative growth per refill");
  bench_cmd->add_flag("--symmetrize", bench.symmetrize, "also insert the reverse of every edge");
  bench_cmd->add_flag("--no-reclaim", bench.no_reclaim, "keep emptied blocks out of the queue");

  std::uint64_t verify_workloads = 1000;
  std::uint64_t verify_seed = 0x5eed;
  std::uint64_t verify_max_vertices = 4096;
  std::uint64_t verify_max_edges = 100000;
  bool verify_quiet = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle-equivalence suite");
  verify_cmd->add_option("--workloads", verify_workloads, "number of randomized workloads");
  verify_cmd->add_option("--seed", verify_seed, "base seed");
  verify_cmd->add_option("--max-vertices", verify_max_vertices, "vertex cap per workload");
  verify_cmd->add_option("--max-edges", verify_max_edges, "edge budget per workload");
  verify_cmd->add_flag("--quiet", verify_quiet, "suppress progress lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bench_cmd->parsed()) return run_bench(bench);
    return run_verify(verify_workloads, verify_seed, verify_max_vertices, verify_max_edges,
                      verify_quiet);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dyngraph::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const dyngraph::EngineError& e) {
    std::cerr << "engine error: " << e.what() << "\n";
    return kExitEngineError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEngineError;
  }
}
