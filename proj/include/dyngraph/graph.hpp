#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "dyngraph/arena.hpp"
#include "dyngraph/block_pool.hpp"
#include "dyngraph/cbt.hpp"
#include "dyngraph/csr.hpp"
#include "dyngraph/edge_block.hpp"
#include "dyngraph/types.hpp"
#include "dyngraph/vertex_dictionary.hpp"

namespace dyngraph {

struct GraphConfig {
  std::uint64_t arena_bytes = 8ull << 30;  // desk-scale stand-in for a device budget
  GrowthPolicy pool;
  bool reclaim_on_delete = true;
  std::uint32_t workers = 1;
};

/// Batch preprocessing output: per-vertex new-block requirements, their
/// inclusive prefix sum (the pop schedule), and the free slots left in each
/// vertex's last-insert block by the previous batch.
struct BatchPlan {
  std::vector<std::uint64_t> blocks_required;
  std::vector<std::uint64_t> prefix_sum;
  std::vector<std::uint32_t> space_remaining;

  std::uint64_t total_blocks() const { return prefix_sum.empty() ? 0 : prefix_sum.back(); }
};

/// Memory consumption by component. Pool bytes count blocks held by
/// adjacencies; queue bytes are the free-ring bookkeeping.
struct MemoryBreakdown {
  std::uint64_t dictionary_bytes = 0;
  std::uint64_t sentinel_bytes = 0;
  std::uint64_t pool_bytes = 0;
  std::uint64_t queue_bytes = 0;

  std::uint64_t total() const {
    return dictionary_bytes + sentinel_bytes + pool_bytes + queue_bytes;
  }
};

struct GraphStats {
  std::uint64_t logical_size = 0;
  std::uint64_t capacity = 0;
  std::uint64_t alive_vertices = 0;
  std::uint64_t active_edges = 0;
  std::uint64_t adjacency_blocks = 0;
  std::uint64_t occupied_slots = 0;
  std::uint64_t hole_slots = 0;
  double hole_ratio = 0.0;
  std::map<std::uint32_t, std::uint64_t> cbt_height_histogram;
  std::uint64_t pool_blocks_created = 0;
  std::uint64_t pool_blocks_in_use = 0;
  std::uint64_t pool_queue_size = 0;
  std::uint64_t arena_reserved_bytes = 0;
  std::uint32_t arena_reservations = 0;
  std::uint32_t pool_growths = 0;
};

/// Dynamic graph over a vertex dictionary, per-vertex complete binary trees
/// of fixed-size edge blocks, and a pre-allocated block queue.
///
/// Every batch runs in three phases: sequential planning (validation, block
/// requirements, prefix sum, pool growth), a per-vertex phase that touches
/// only that vertex's sentinel and blocks plus its disjoint pop range, and a
/// sequential epilogue (front commit, growth check, reclamation). The
/// resulting state is identical for any worker count.
class DynamicGraph {
 public:
  /// Launch-time setup: exactly three arena reservations (vertex dictionary,
  /// edge sentinels, edge-block pool).
  DynamicGraph(const GraphConfig& config, std::uint64_t initial_vertex_count,
               std::uint32_t block_size)
      : config_(config),
        arena_(config.arena_bytes),
        dictionary_(arena_, initial_vertex_count),
        pool_(arena_, config.pool, block_size) {
    if (config_.workers == 0) config_.workers = 1;
  }

  DynamicGraph(const DynamicGraph&) = delete;
  DynamicGraph& operator=(const DynamicGraph&) = delete;

  std::uint32_t block_size() const { return pool_.block_size(); }
  std::uint64_t logical_size() const { return dictionary_.logical_size(); }
  std::uint64_t vertex_capacity() const { return dictionary_.capacity(); }
  std::uint64_t alive_vertices() const { return dictionary_.alive_count(); }
  std::uint64_t active_edges() const { return active_edges_; }

  const Arena& arena() const { return arena_; }
  const VertexDictionary& dictionary() const { return dictionary_; }
  BlockPool& pool() { return pool_; }
  const BlockPool& pool() const { return pool_; }

  bool vertex_alive(VertexId v) const { return dictionary_.alive(v); }
  const EdgeSentinel& sentinel_of(VertexId v) const { return dictionary_.sentinel(v); }

  /// In-order block handles of a vertex's adjacency.
  std::vector<BlockHandle> adjacency_blocks(VertexId v) const {
    return in_order_blocks(pool_, dictionary_.sentinel(v));
  }

  /// Snapshot of the non-tombstoned destinations of `v`, in traversal order.
  std::vector<VertexId> active_destinations(VertexId v) const {
    std::vector<VertexId> out;
    if (v >= logical_size()) return out;
    const EdgeSentinel& s = dictionary_.sentinel(v);
    out.reserve(s.active_edge_count);
    for (BlockHandle h : in_order_blocks(pool_, s)) {
      const EdgeBlock& b = pool_.block(h);
      const auto es = pool_.entries(h);
      for (std::uint32_t i = 0; i < b.occupied_count; ++i) {
        if (!es[i].tombstone) out.push_back(es[i].destination);
      }
    }
    return out;
  }

  /// Preprocesses an insert batch: validates the CSR, then derives each
  /// vertex's new-block requirement from its degree and the space remaining
  /// in its last-insert block, plus the inclusive prefix sum used to assign
  /// disjoint pop ranges.
  BatchPlan plan_batch(const CsrBatch& batch) const {
    if (batch.kind != BatchKind::Insert) {
      throw DataError("plan_batch: expected an insert batch");
    }
    validate_insert(batch);
    const std::uint64_t n = batch.vertex_count();
    BatchPlan plan;
    plan.blocks_required.resize(n);
    plan.prefix_sum.resize(n);
    plan.space_remaining.resize(n);
    const std::uint64_t block_size = pool_.block_size();
    std::uint64_t running = 0;
    for (std::uint64_t v = 0; v < n; ++v) {
      const EdgeSentinel& s = dictionary_.sentinel(static_cast<VertexId>(v));
      const std::uint32_t space =
          s.block_count == 0 ? 0u : static_cast<std::uint32_t>(block_size) - s.last_insert_offset;
      const std::uint64_t degree = batch.degree(static_cast<VertexId>(v));
      const std::uint64_t overflow = degree > space ? degree - space : 0;
      const std::uint64_t required = (overflow + block_size - 1) / block_size;
      plan.space_remaining[v] = space;
      plan.blocks_required[v] = required;
      running += required;
      plan.prefix_sum[v] = running;
    }
    return plan;
  }

  /// Batched edge insertion. Appends each vertex's destinations starting at
  /// the last-insert position when space remains, then sequentially through
  /// the blocks freshly attached to its tree; commits the queue front once
  /// at the end. A batch that cannot be supplied with blocks aborts without
  /// modifying the graph.
  void insert_batch(const CsrBatch& batch) {
    const BatchPlan plan = plan_batch(batch);
    const std::uint64_t total = plan.total_blocks();
    pool_.ensure_available(total);
    pool_.materialize(pool_.queue_front() + total);

    const std::uint64_t n = batch.vertex_count();
    const std::uint64_t front = pool_.queue_front();
    parallel_for(n, [&](std::uint64_t v) {
      const std::uint64_t degree = batch.degree(static_cast<VertexId>(v));
      if (degree == 0) return;
      const std::uint64_t start = front + (v == 0 ? 0 : plan.prefix_sum[v - 1]);
      const std::vector<BlockHandle> fresh = pool_.pop_range(start, plan.blocks_required[v]);
      insert_adjacency(static_cast<VertexId>(v),
                       std::span<const VertexId>(batch.destinations)
                           .subspan(batch.offsets[v], degree),
                       fresh, plan.space_remaining[v]);
    });

    active_edges_ += batch.edge_count();
    pool_.commit_front(total);
  }

  /// Batched edge deletion by tombstoning. Every non-tombstoned entry whose
  /// destination appears in its vertex's delete range is marked deleted;
  /// counts are decremented per match. Absent edges are a no-op. When
  /// reclaim_on_delete is set, blocks emptied at the tail of a tree are
  /// detached and returned to the queue in the epilogue.
  void delete_batch(const CsrBatch& batch) {
    if (batch.kind != BatchKind::Delete) {
      throw DataError("delete_batch: expected a delete batch");
    }
    validate_batch(batch, logical_size());

    const std::uint64_t n = batch.vertex_count();
    std::vector<std::uint64_t> matched(n, 0);
    parallel_for(n, [&](std::uint64_t v) {
      const std::uint64_t degree = batch.degree(static_cast<VertexId>(v));
      if (degree == 0 || !dictionary_.alive(static_cast<VertexId>(v))) return;
      matched[v] = delete_adjacency(static_cast<VertexId>(v),
                                    std::span<const VertexId>(batch.destinations)
                                        .subspan(batch.offsets[v], degree));
    });

    std::uint64_t total_matched = 0;
    for (std::uint64_t v = 0; v < n; ++v) total_matched += matched[v];
    active_edges_ -= total_matched;

    if (config_.reclaim_on_delete) {
      std::vector<BlockHandle> freed;
      for (std::uint64_t v = 0; v < n; ++v) {
        if (matched[v] > 0) detach_empty_tail(static_cast<VertexId>(v), freed);
      }
      pool_.reclaim(freed);
    }
  }

  /// Edge membership. Phase one collects the adjacency's blocks in order;
  /// phase two fans out over every (block, slot) pair of the collected
  /// addresses. Vacant and tombstoned slots never match. Unknown or dead
  /// sources answer false.
  bool query_edge(VertexId source, VertexId destination) const {
    if (!dictionary_.alive(source)) return false;
    const std::vector<BlockHandle> blocks = in_order_blocks(pool_, dictionary_.sentinel(source));
    const std::uint64_t block_size = pool_.block_size();
    const std::uint64_t fanout = blocks.size() * block_size;
    for (std::uint64_t i = 0; i < fanout; ++i) {
      const BlockHandle h = blocks[i / block_size];
      const auto slot = static_cast<std::uint32_t>(i % block_size);
      if (slot >= pool_.block(h).occupied_count) continue;
      const EdgeEntry& e = pool_.entries(h)[slot];
      if (!e.tombstone && e.destination == destination) return true;
    }
    return false;
  }

  /// Appends `count` fresh vertices, each with a new sentinel. The
  /// dictionary doubles (staying a power of two) when the logical size
  /// outgrows it.
  void insert_vertices(std::uint64_t count) { dictionary_.append(arena_, count); }

  /// Marks vertices dead. Capacity never shrinks and ids are never reused;
  /// the adjacency becomes unreachable, and its blocks are returned to the
  /// queue only when reclaim_on_delete is set. Unknown or already-dead ids
  /// are skipped and reported back.
  std::vector<VertexId> delete_vertices(std::span<const VertexId> ids) {
    std::vector<VertexId> skipped;
    std::vector<BlockHandle> freed;
    for (VertexId v : ids) {
      if (!dictionary_.alive(v)) {
        skipped.push_back(v);
        continue;
      }
      EdgeSentinel& s = dictionary_.sentinel(v);
      active_edges_ -= s.active_edge_count;
      if (config_.reclaim_on_delete && s.block_count > 0) {
        for (BlockHandle h : in_order_blocks(pool_, s)) {
          EdgeBlock& b = pool_.block(h);
          b.active_count = 0;
          b.left_child = kNullBlock;
          b.right_child = kNullBlock;
          freed.push_back(h);
        }
        s = EdgeSentinel{};
      }
      dictionary_.retire(v);
    }
    pool_.reclaim(freed);
    return skipped;
  }

  MemoryBreakdown memory() const {
    MemoryBreakdown m;
    m.dictionary_bytes = dictionary_.dictionary_bytes();
    m.sentinel_bytes = dictionary_.sentinel_bytes();
    m.pool_bytes = pool_.in_use_bytes();
    m.queue_bytes = pool_.ring_bytes();
    return m;
  }

  GraphStats stats() const {
    GraphStats st;
    st.logical_size = logical_size();
    st.capacity = dictionary_.capacity();
    st.alive_vertices = dictionary_.alive_count();
    st.active_edges = active_edges_;
    for (std::uint64_t v = 0; v < logical_size(); ++v) {
      if (!dictionary_.alive(static_cast<VertexId>(v))) continue;
      const EdgeSentinel& s = dictionary_.sentinel(static_cast<VertexId>(v));
      st.adjacency_blocks += s.block_count;
      if (s.block_count > 0) {
        ++st.cbt_height_histogram[static_cast<std::uint32_t>(std::bit_width(
            static_cast<std::uint64_t>(s.block_count)))];
      }
      for (BlockHandle h : in_order_blocks(pool_, s)) {
        const EdgeBlock& b = pool_.block(h);
        st.occupied_slots += b.occupied_count;
        st.hole_slots += b.occupied_count - b.active_count;
      }
    }
    st.hole_ratio = st.occupied_slots == 0
                        ? 0.0
                        : static_cast<double>(st.hole_slots) / static_cast<double>(st.occupied_slots);
    st.pool_blocks_created = pool_.blocks_created();
    st.pool_blocks_in_use = pool_.blocks_in_use();
    st.pool_queue_size = pool_.queue_size();
    st.arena_reserved_bytes = arena_.reserved_bytes();
    st.arena_reservations = arena_.reservation_count();
    st.pool_growths = pool_.growth_count();
    return st;
  }

 private:
  void validate_insert(const CsrBatch& batch) const {
    dyngraph::validate_batch(batch, logical_size());
    for (std::uint64_t v = 0; v < batch.vertex_count(); ++v) {
      if (batch.degree(static_cast<VertexId>(v)) > 0 &&
          !dictionary_.alive(static_cast<VertexId>(v))) {
        throw DataError("csr batch: insert lists edges for retired vertex " + std::to_string(v));
      }
    }
  }

  /// Per-vertex insert phase. `fresh` are this vertex's newly popped blocks
  /// in queue order; they are attached in level-order sequence and filled
  /// after whatever space the previous batch left behind.
  void insert_adjacency(VertexId v, std::span<const VertexId> destinations,
                        std::span<const BlockHandle> fresh, std::uint32_t space_remaining) {
    EdgeSentinel& s = dictionary_.sentinel(v);
    for (BlockHandle h : fresh) {
      cbt_attach(pool_, s, h, static_cast<std::uint64_t>(s.block_count) + 1);
    }

    const std::uint32_t block_size = pool_.block_size();
    BlockHandle cur;
    std::uint32_t offset;
    std::size_t next_fresh;
    if (space_remaining > 0) {
      assert(s.last_insert_block != kNullBlock);
      cur = s.last_insert_block;
      offset = s.last_insert_offset;
      next_fresh = 0;
    } else {
      cur = fresh[0];
      offset = 0;
      next_fresh = 1;
    }

    for (VertexId dst : destinations) {
      if (offset == block_size) {
        cur = fresh[next_fresh++];
        offset = 0;
      }
      EdgeBlock& b = pool_.block(cur);
      assert(offset == b.occupied_count);
      pool_.entries(cur)[offset] = EdgeEntry{dst, false};
      ++b.active_count;
      ++b.occupied_count;
      ++offset;
    }
    assert(next_fresh == fresh.size());

    s.active_edge_count += destinations.size();
    s.last_insert_block = cur;
    s.last_insert_offset = offset;
  }

  /// Per-vertex delete phase: in-order traversal, tombstoning every entry
  /// whose destination is listed in this vertex's delete range.
  std::uint64_t delete_adjacency(VertexId v, std::span<const VertexId> targets) {
    EdgeSentinel& s = dictionary_.sentinel(v);
    if (s.block_count == 0) return 0;
    const std::unordered_set<VertexId> target_set(targets.begin(), targets.end());
    std::uint64_t matched = 0;
    for (BlockHandle h : in_order_blocks(pool_, s)) {
      EdgeBlock& b = pool_.block(h);
      const auto es = pool_.entries(h);
      for (std::uint32_t i = 0; i < b.occupied_count; ++i) {
        if (!es[i].tombstone && target_set.contains(es[i].destination)) {
          es[i].tombstone = true;
          --b.active_count;
          ++matched;
        }
      }
    }
    s.active_edge_count -= matched;
    return matched;
  }

  /// Detaches and collects tail blocks whose active count reached zero,
  /// repairing the sentinel's last-insert position afterwards.
  void detach_empty_tail(VertexId v, std::vector<BlockHandle>& freed) {
    EdgeSentinel& s = dictionary_.sentinel(v);
    bool detached = false;
    while (s.block_count > 0 &&
           pool_.block(cbt_block_at(pool_, s, s.block_count)).active_count == 0) {
      freed.push_back(cbt_detach_tail(pool_, s));
      detached = true;
    }
    if (!detached) return;
    if (s.block_count == 0) {
      s = EdgeSentinel{};
    } else {
      const BlockHandle tail = cbt_block_at(pool_, s, s.block_count);
      s.last_insert_block = tail;
      s.last_insert_offset = pool_.block(tail).occupied_count;
    }
  }

  /// Static partition of [0, n) across the configured worker threads. Each
  /// worker only writes vertex-owned state, so the result is independent of
  /// the partition.
  template <class Fn>
  void parallel_for(std::uint64_t n, Fn&& fn) {
    const std::uint32_t workers = config_.workers;
    if (workers <= 1 || n < 2 * workers) {
      for (std::uint64_t i = 0; i < n; ++i) fn(i);
      return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::uint64_t chunk = (n + workers - 1) / workers;
    for (std::uint32_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = w * chunk;
      const std::uint64_t end = begin + chunk < n ? begin + chunk : n;
      if (begin >= end) break;
      threads.emplace_back([&fn, begin, end] {
        for (std::uint64_t i = begin; i < end; ++i) fn(i);
      });
    }
    for (auto& t : threads) t.join();
  }

  GraphConfig config_;
  Arena arena_;
  VertexDictionary dictionary_;
  BlockPool pool_;
  std::uint64_t active_edges_ = 0;
};

}  // namespace dyngraph
