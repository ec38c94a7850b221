#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "dyngraph/csr.hpp"
#include "dyngraph/graph.hpp"
#include "dyngraph/io/batching.hpp"
#include "dyngraph/io/loaders.hpp"
#include "dyngraph/io/synthetic.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph::io {

enum class OpsMode { Insert, Delete, InsertThenDelete, QuerySample };

/// One benchmark run: where the graph comes from, how it is sliced into
/// batches, which operations run, and the engine configuration.
struct WorkloadSpec {
  enum class Source { MatrixMarket, EdgeList, SynthUniform, SynthPowerLaw };

  std::string graph_name = "graph";
  Source source = Source::MatrixMarket;
  std::string input_path;
  std::uint64_t synth_vertices = 0;
  std::uint64_t synth_edges = 0;
  bool symmetrize = false;

  std::uint64_t batch_size = 0;  // 0 = bulk
  OpsMode ops = OpsMode::Insert;
  EdgeOrder order = EdgeOrder::Prefix;
  std::uint64_t seed = 1;
  std::uint32_t block_size = 0;  // 0 = auto (from the first batch)
  std::uint64_t query_sample = 1000;
  GraphConfig config;
};

struct PhaseRow {
  std::string phase;
  double ms = 0.0;
  MemoryBreakdown memory;
};

/// Per-phase wall times and memory snapshots plus end-of-run structure
/// statistics. Timing covers engine work only; file parsing and batch
/// construction happen before the clock starts.
struct RunReport {
  std::string graph_name;
  std::uint64_t batch_size = 0;  // 0 = bulk
  std::uint64_t vertex_count = 0;
  std::uint64_t edges_inserted = 0;
  std::uint64_t edges_deleted = 0;
  std::uint64_t queries_run = 0;
  std::uint64_t queries_hit = 0;
  std::uint32_t effective_block_size = 0;
  std::vector<PhaseRow> rows;
  GraphStats final_stats;

  double total_ms(const std::string& phase) const {
    double total = 0.0;
    for (const auto& row : rows) {
      if (row.phase == phase) total += row.ms;
    }
    return total;
  }
};

/// Nanosecond clock hook; tests inject a fake one so reports are
/// reproducible byte for byte.
using ClockFn = std::function<std::uint64_t()>;

inline ClockFn steady_clock_ns() {
  return [] {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now().time_since_epoch())
            .count());
  };
}

inline Csr load_source(const WorkloadSpec& spec) {
  switch (spec.source) {
    case WorkloadSpec::Source::MatrixMarket:
      return load_matrix_market(spec.input_path, spec.symmetrize);
    case WorkloadSpec::Source::EdgeList:
      return load_edge_list(spec.input_path, spec.symmetrize);
    case WorkloadSpec::Source::SynthUniform:
      return synth_uniform(spec.synth_vertices, spec.synth_edges, spec.seed);
    case WorkloadSpec::Source::SynthPowerLaw:
      return synth_power_law(spec.synth_vertices, spec.synth_edges, spec.seed);
  }
  throw DataError("unknown workload source");
}

/// Executes a workload: init, insert batches, optional delete batches, and a
/// query sample, recording wall time and a memory snapshot per phase.
inline RunReport run_workload(const WorkloadSpec& spec, const Csr& csr,
                              ClockFn clock = steady_clock_ns()) {
  RunReport report;
  report.graph_name = spec.graph_name;
  report.batch_size = spec.batch_size;
  report.vertex_count = csr.vertex_count;

  // Delete runs measure batched deletes against a structure built in one go;
  // the other modes insert with the requested batch size.
  const std::uint64_t insert_batch_size = spec.ops == OpsMode::Delete ? 0 : spec.batch_size;
  auto insert_batches = make_batches(csr, insert_batch_size, BatchKind::Insert, spec.order, spec.seed);

  std::uint32_t block_size = spec.block_size;
  if (block_size == 0) {
    block_size = insert_batches.front().edge_count() > 0 ? compute_block_size(insert_batches.front())
                                                         : 1;
  }
  report.effective_block_size = block_size;

  auto timed = [&](const std::string& phase, auto&& body) {
    const std::uint64_t start = clock();
    body();
    const std::uint64_t stop = clock();
    return PhaseRow{phase, static_cast<double>(stop - start) / 1e6, MemoryBreakdown{}};
  };

  std::optional<DynamicGraph> graph;
  {
    PhaseRow row = timed("init", [&] { graph.emplace(spec.config, csr.vertex_count, block_size); });
    row.memory = graph->memory();
    report.rows.push_back(row);
  }

  for (const CsrBatch& batch : insert_batches) {
    PhaseRow row = timed("insert", [&] { graph->insert_batch(batch); });
    row.memory = graph->memory();
    report.rows.push_back(row);
    report.edges_inserted += batch.edge_count();
  }

  if (spec.ops == OpsMode::Delete || spec.ops == OpsMode::InsertThenDelete) {
    auto delete_batches =
        make_batches(csr, spec.batch_size, BatchKind::Delete, spec.order, spec.seed);
    for (const CsrBatch& batch : delete_batches) {
      PhaseRow row = timed("delete", [&] { graph->delete_batch(batch); });
      row.memory = graph->memory();
      report.rows.push_back(row);
      report.edges_deleted += batch.edge_count();
    }
  }

  if (spec.query_sample > 0 && csr.vertex_count > 0) {
    std::mt19937_64 rng(spec.seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::pair<VertexId, VertexId>> queries;
    queries.reserve(spec.query_sample);
    for (std::uint64_t i = 0; i < spec.query_sample; ++i) {
      if (i % 2 == 0 && csr.edge_count() > 0) {
        // positive candidate: an edge of the input
        const std::uint64_t e = rng() % csr.edge_count();
        std::uint64_t lo = 0, hi = csr.vertex_count;
        while (lo + 1 < hi) {
          const std::uint64_t mid = (lo + hi) / 2;
          if (csr.offsets[mid] <= e) {
            lo = mid;
          } else {
            hi = mid;
          }
        }
        queries.emplace_back(static_cast<VertexId>(lo), csr.destinations[e]);
      } else {
        queries.emplace_back(static_cast<VertexId>(rng() % csr.vertex_count),
                             static_cast<VertexId>(rng() % csr.vertex_count));
      }
    }
    std::uint64_t hits = 0;
    PhaseRow row = timed("query", [&] {
      for (const auto& [src, dst] : queries) hits += graph->query_edge(src, dst) ? 1 : 0;
    });
    row.memory = graph->memory();
    report.rows.push_back(row);
    report.queries_run = queries.size();
    report.queries_hit = hits;
  }

  report.final_stats = graph->stats();
  return report;
}

inline RunReport run_workload(const WorkloadSpec& spec, ClockFn clock = steady_clock_ns()) {
  return run_workload(spec, load_source(spec), std::move(clock));
}

/// CSV emission: one row per phase, stable ordering, fixed schema.
inline void write_csv(const RunReport& report, std::ostream& out) {
  out << "graph,batch_size,phase,ms,bytes_dict,bytes_sentinel,bytes_pool,bytes_total\n";
  const std::string batch =
      report.batch_size == 0 ? std::string("bulk") : std::to_string(report.batch_size);
  for (const auto& row : report.rows) {
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.3f", row.ms);
    out << report.graph_name << ',' << batch << ',' << row.phase << ',' << ms << ','
        << row.memory.dictionary_bytes << ',' << row.memory.sentinel_bytes << ','
        << row.memory.pool_bytes << ',' << row.memory.total() << "\n";
  }
}

}  // namespace dyngraph::io
