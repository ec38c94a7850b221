#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dyngraph/csr.hpp"
#include "dyngraph/graph.hpp"
#include "dyngraph/oracle.hpp"
#include "dyngraph/types.hpp"

namespace dyngraph {

/// Full structural audit of an engine-built graph: CBT completeness, count
/// consistency, occupied-prefix shape, last-insert bookkeeping, and handle
/// conservation across adjacencies and the free queue. Returns the first
/// violation found, or nullopt when the structure is sound.
inline std::optional<std::string> check_structure(const DynamicGraph& graph) {
  const BlockPool& pool = graph.pool();
  const std::uint64_t created = pool.blocks_created();
  // 0 = unseen, 1 = queued, 2 = in an adjacency
  std::vector<std::uint8_t> mark(created, 0);

  const EdgeQueue& queue = pool.queue();
  for (std::uint64_t p = queue.front(); p < queue.rear(); ++p) {
    const BlockHandle h = queue.at(p);
    if (h >= created) return "queued handle " + std::to_string(h) + " was never created";
    if (mark[h] != 0) return "handle " + std::to_string(h) + " queued twice";
    mark[h] = 1;
    if (h < pool.materialized()) {
      const EdgeBlock& b = pool.block(h);
      if (b.active_count != 0 || b.occupied_count != 0 || b.has_children()) {
        return "queued handle " + std::to_string(h) + " is not a zeroed block";
      }
    }
  }

  const std::uint64_t block_size = pool.block_size();
  for (std::uint64_t v = 0; v < graph.logical_size(); ++v) {
    const EdgeSentinel& s = graph.sentinel_of(static_cast<VertexId>(v));
    const bool alive = graph.vertex_alive(static_cast<VertexId>(v));
    const std::string who = "vertex " + std::to_string(v);

    if (s.block_count == 0) {
      if (s.cbt_root != kNullBlock) return who + ": empty adjacency with a root block";
      if (alive && s.active_edge_count != 0) return who + ": edge count without blocks";
      continue;
    }
    if (s.cbt_root == kNullBlock) return who + ": block count without a root";

    // Level-order walk carrying each block's 1-based position.
    std::vector<std::pair<BlockHandle, std::uint64_t>> frontier{{s.cbt_root, 1}};
    std::uint64_t visited = 0;
    std::uint64_t active_sum = 0;
    BlockHandle tail = kNullBlock;
    while (!frontier.empty()) {
      const auto [h, pos] = frontier.back();
      frontier.pop_back();
      if (pos > s.block_count) return who + ": block at position " + std::to_string(pos) +
                                      " breaks completeness (count " +
                                      std::to_string(s.block_count) + ")";
      if (h >= created) return who + ": adjacency references uncreated handle";
      if (mark[h] != 0) return who + ": handle " + std::to_string(h) + " is owned twice";
      mark[h] = 2;
      ++visited;
      const EdgeBlock& b = pool.block(h);
      active_sum += b.active_count;
      if (b.active_count > b.occupied_count || b.occupied_count > block_size) {
        return who + ": block counters out of range";
      }
      if (alive) {
        if (pos < s.block_count && b.occupied_count != block_size) {
          return who + ": non-tail block at position " + std::to_string(pos) + " is not full";
        }
        if (pos == s.block_count && b.occupied_count == 0) {
          return who + ": tail block was never written";
        }
      }
      if (pos == s.block_count) tail = h;
      if (b.left_child != kNullBlock) frontier.emplace_back(b.left_child, pos * 2);
      if (b.right_child != kNullBlock) frontier.emplace_back(b.right_child, pos * 2 + 1);
    }
    if (visited != s.block_count) {
      return who + ": reached " + std::to_string(visited) + " blocks, expected " +
             std::to_string(s.block_count);
    }
    if (alive) {
      if (active_sum != s.active_edge_count) {
        return who + ": sentinel edge count " + std::to_string(s.active_edge_count) +
               " != block sum " + std::to_string(active_sum);
      }
      if (s.last_insert_block != tail) return who + ": last-insert block is not the tail";
      if (s.last_insert_offset != pool.block(tail).occupied_count) {
        return who + ": last-insert offset does not resume at the tail's occupied count";
      }
    }
  }

  for (std::uint64_t h = 0; h < created; ++h) {
    if (mark[h] == 0) return "handle " + std::to_string(h) + " is neither queued nor in use";
  }
  return std::nullopt;
}

struct VerifyOptions {
  std::uint64_t workloads = 1000;
  std::uint64_t seed = 0x5eed;
  std::uint64_t max_vertices = 4096;
  std::uint64_t max_edges = 100000;
  bool check_structure_every_batch = true;
  std::ostream* progress = nullptr;
  std::uint64_t progress_every = 100;
};

struct VerifyResult {
  std::uint64_t workloads_run = 0;
  std::uint64_t batches_run = 0;
  std::uint64_t edges_inserted = 0;
  std::uint64_t edges_deleted = 0;
  std::uint64_t vertex_ops = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

namespace detail {

/// One randomized workload: engine and oracle driven in lockstep through a
/// mix of edge batches and vertex updates, structure-checked after every
/// batch, oracle-compared at the end.
inline void run_one_workload(std::uint64_t workload_index, std::uint64_t workload_seed,
                             const VerifyOptions& options, VerifyResult& result) {
  std::mt19937_64 rng(workload_seed);
  auto fail = [&](const std::string& what) {
    result.mismatches.push_back("workload " + std::to_string(workload_index) + " (seed " +
                                std::to_string(workload_seed) + "): " + what);
  };

  const std::uint64_t initial_vertices = 1 + rng() % 256;
  GraphConfig config;
  config.arena_bytes = 8ull << 20;
  config.pool.initial_fraction = 0.002 + static_cast<double>(rng() % 32) / 1000.0;
  config.reclaim_on_delete = rng() % 2 == 0;
  config.workers = 1 + static_cast<std::uint32_t>(rng() % 3);
  const std::uint32_t block_size = 1 + static_cast<std::uint32_t>(rng() % 8);

  DynamicGraph graph(config, initial_vertices, block_size);
  OracleGraph oracle(initial_vertices);

  std::vector<VertexId> alive;
  for (std::uint64_t v = 0; v < initial_vertices; ++v) alive.push_back(static_cast<VertexId>(v));
  std::vector<std::pair<VertexId, VertexId>> edge_log;

  std::uint64_t edge_budget = 200 + rng() % options.max_edges;
  if (edge_budget > options.max_edges) edge_budget = options.max_edges;
  std::uint64_t inserted = 0;

  auto run_batch = [&](const CsrBatch& batch) -> bool {
    if (batch.kind == BatchKind::Insert) {
      graph.insert_batch(batch);
    } else {
      graph.delete_batch(batch);
    }
    oracle.apply(batch);
    ++result.batches_run;
    if (options.check_structure_every_batch) {
      if (auto err = check_structure(graph)) {
        fail(*err);
        return false;
      }
    }
    return true;
  };

  const std::uint64_t steps = 4 + rng() % 20;
  for (std::uint64_t step = 0; step < steps; ++step) {
    std::uint64_t roll = rng() % 100;
    if (alive.empty() && roll < 80) roll = 90;  // nothing to touch: add vertices
    if (roll < 55) {
      // insert edges
      if (inserted >= edge_budget || alive.empty()) continue;
      std::uint64_t k = 1 + rng() % 4096;
      if (k > edge_budget - inserted) k = edge_budget - inserted;
      std::vector<std::pair<VertexId, VertexId>> pairs;
      pairs.reserve(k);
      for (std::uint64_t i = 0; i < k; ++i) {
        const VertexId src = alive[rng() % alive.size()];
        const auto dst = static_cast<VertexId>(rng() % graph.logical_size());
        pairs.emplace_back(src, dst);
        edge_log.emplace_back(src, dst);
      }
      if (!run_batch(csr_from_pairs(BatchKind::Insert, graph.logical_size(), pairs))) return;
      inserted += k;
      result.edges_inserted += k;
    } else if (roll < 80) {
      // delete edges: mostly edges that were inserted, some arbitrary pairs
      if (edge_log.empty()) continue;
      const std::uint64_t k = 1 + rng() % std::min<std::uint64_t>(edge_log.size(), 2048);
      std::vector<std::pair<VertexId, VertexId>> pairs;
      pairs.reserve(k);
      for (std::uint64_t i = 0; i < k; ++i) {
        if (rng() % 10 < 7) {
          pairs.push_back(edge_log[rng() % edge_log.size()]);
        } else {
          pairs.emplace_back(static_cast<VertexId>(rng() % graph.logical_size()),
                             static_cast<VertexId>(rng() % graph.logical_size()));
        }
      }
      result.edges_deleted += k;
      if (!run_batch(csr_from_pairs(BatchKind::Delete, graph.logical_size(), pairs))) return;
    } else if (roll < 90) {
      // insert vertices
      if (graph.logical_size() >= options.max_vertices) continue;
      std::uint64_t count = 1 + rng() % 64;
      if (graph.logical_size() + count > options.max_vertices) {
        count = options.max_vertices - graph.logical_size();
      }
      const auto first = static_cast<VertexId>(graph.logical_size());
      graph.insert_vertices(count);
      oracle.insert_vertices(count);
      for (std::uint64_t i = 0; i < count; ++i) alive.push_back(static_cast<VertexId>(first + i));
      ++result.vertex_ops;
    } else {
      // delete vertices, occasionally including an already-dead id
      if (alive.empty()) continue;
      const std::uint64_t count = 1 + rng() % 4;
      std::vector<VertexId> ids;
      for (std::uint64_t i = 0; i < count; ++i) ids.push_back(alive[rng() % alive.size()]);
      if (rng() % 4 == 0) {
        for (std::uint64_t v = 0; v < graph.logical_size(); ++v) {
          if (!graph.vertex_alive(static_cast<VertexId>(v))) {
            ids.push_back(static_cast<VertexId>(v));
            break;
          }
        }
      }
      graph.delete_vertices(ids);
      oracle.delete_vertices(ids);
      for (VertexId id : ids) {
        for (std::size_t i = 0; i < alive.size(); ++i) {
          if (alive[i] == id) {
            alive[i] = alive.back();
            alive.pop_back();
            break;
          }
        }
      }
      ++result.vertex_ops;
      if (options.check_structure_every_batch) {
        if (auto err = check_structure(graph)) {
          fail(*err);
          return;
        }
      }
    }
  }

  for (const std::string& line : oracle_compare(oracle, graph, workload_seed ^ 0xabcd)) {
    fail(line);
  }
}

}  // namespace detail

/// Runs the randomized oracle-equivalence suite. Every workload gets its own
/// seed derived from options.seed, so failures are reproducible in
/// isolation.
inline VerifyResult run_verify(const VerifyOptions& options) {
  VerifyResult result;
  std::mt19937_64 seeder(options.seed);
  for (std::uint64_t w = 0; w < options.workloads; ++w) {
    const std::uint64_t workload_seed = seeder();
    detail::run_one_workload(w, workload_seed, options, result);
    ++result.workloads_run;
    if (options.progress && options.progress_every > 0 && (w + 1) % options.progress_every == 0) {
      *options.progress << "verify: " << (w + 1) << "/" << options.workloads << " workloads, "
                        << result.mismatches.size() << " mismatches\n";
    }
  }
  return result;
}

}  // namespace dyngraph
